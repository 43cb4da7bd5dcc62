/*
Copyright 2026 The trigpde authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

// Minimal library walkthrough: set up a problem from scratch, integrate it
// with each method, and compare against the known solution.
//
// The equation is the heat equation u_t = u_xx on [0, pi] with a Dirichlet
// end at x = 0 and a Neumann end at x = pi, solved by
//   u(t, x) = 4 sin(x/2) e^{-t/4} + sin(3x/2) e^{-9t/4}.

#include <cmath>
#include <cstdio>
#include <numbers>

#include "trigpde/bench.hpp"

using namespace trigpde;

int main() {
    constexpr double pi = std::numbers::pi;

    Problem pb;
    pb.id = "demo-heat-DN";
    pb.grid = Grid(0.0, pi, 51);
    // dt sits below the explicit stability limit 2/k_max^2 so all methods run
    pb.time = TimeGrid(0.0, 4.0, 8000);
    pb.coeffs = LinearCoefficients::uniform(1, 1.0);
    pb.exact = [](int, double t, double x) -> Complex {
        return 4.0 * std::sin(x / 2.0) * std::exp(-t / 4.0) +
               std::sin(1.5 * x) * std::exp(-2.25 * t);
    };
    pb.init = [exact = pb.exact](int c, double x) { return exact(c, 0.0, x); };
    // both boundary values are zero: sin(x/2) vanishes at 0, its slope at pi
    pb.boundary = BoundarySpec::uniform(
        1, make_pair(BoundaryKind::Dirichlet, BoundaryKind::Neumann));

    std::printf("%-6s %-12s %-10s\n", "method", "eps_c", "seconds");
    for (Method m : {Method::FIP, Method::FSD, Method::FD}) {
        ErrorReport rep = bench::evaluate(pb, m);
        std::printf("%-6s %-12.3e %-10.4f\n", rep.method.c_str(), rep.error,
                    rep.seconds);
    }
    return 0;
}
