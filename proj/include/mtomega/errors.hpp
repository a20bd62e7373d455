/* Copyright 2026 The mtomega Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Exception types shared by every module.

#ifndef MTOMEGA_ERRORS_HPP
#define MTOMEGA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mtomega {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define MTOMEGA_DEFINE_ERROR(Name)                 \
    struct Name : Error {                          \
        explicit Name(const std::string& what)     \
            : Error(#Name ": " + what) {}          \
    }

MTOMEGA_DEFINE_ERROR(LengthError);
MTOMEGA_DEFINE_ERROR(NotInH1Error);
MTOMEGA_DEFINE_ERROR(EmptyWordError);
MTOMEGA_DEFINE_ERROR(InternalClosureError);
MTOMEGA_DEFINE_ERROR(DenominatorError);
MTOMEGA_DEFINE_ERROR(RangeError);
MTOMEGA_DEFINE_ERROR(DivisionByZero);
MTOMEGA_DEFINE_ERROR(NotIntegralError);
MTOMEGA_DEFINE_ERROR(PoleError);
MTOMEGA_DEFINE_ERROR(NotAdmissibleError);
MTOMEGA_DEFINE_ERROR(DependentInputError);
MTOMEGA_DEFINE_ERROR(PrecisionError);
MTOMEGA_DEFINE_ERROR(ParseError);

#undef MTOMEGA_DEFINE_ERROR

}  // namespace mtomega

#endif  // MTOMEGA_ERRORS_HPP
