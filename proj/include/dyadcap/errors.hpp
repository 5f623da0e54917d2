// SPDX-License-Identifier: Apache-2.0
//
// dyadcap: ergodic capacity of single-hop and dyadic Nakagami-m fading channels
// Copyright (C) 2026 The dyadcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef DYADCAP_ERRORS_HPP
#define DYADCAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dyadcap
{
    // Argument outside the mathematical domain of a function (x <= 0 for Gamma, m < 1/2, ...).
    class domain_error : public std::domain_error
    {
    public:
        explicit domain_error(const std::string &what) : std::domain_error(what) {}
    };

    // An iterative numerical method ran out of budget before meeting its tolerance.
    class convergence_error : public std::runtime_error
    {
    public:
        explicit convergence_error(const std::string &what) : std::runtime_error(what) {}
    };

    // Root bracket could not be established after geometric expansion.
    class bracket_error : public convergence_error
    {
    public:
        explicit bracket_error(const std::string &what) : convergence_error(what) {}
    };

    // Requested Monte Carlo configuration cannot produce a meaningful estimate.
    class sampling_error : public std::invalid_argument
    {
    public:
        explicit sampling_error(const std::string &what) : std::invalid_argument(what) {}
    };

    namespace detail
    {
        inline void require_domain(bool ok, const char *what)
        {
            if (!ok)
                throw domain_error(what);
        }
    }
}

#endif
