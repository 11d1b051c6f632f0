// Copyright 2026 The gaussdisc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GAUSSDISC_ERRORS_H
#define GAUSSDISC_ERRORS_H

#include <stdexcept>
#include <string>

namespace gaussdisc {

/// A parameter lies outside the physical or mathematical domain of an operation.
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// An iterative numerical routine (eigen-solve, minimizer, quadrature) failed.
class NumericalError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A truncated Fock-space construction lost more trace than the configured tolerance.
class ConvergenceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A verification scan did not confirm the expected optimum.
class ReportFailure : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace gaussdisc

#endif
