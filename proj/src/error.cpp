/*
   Copyright 2026 The grassid Authors

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

#include "grassid/error.hpp"

namespace grassid {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::MixedRings: return "MixedRings";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NonIncreasingIndices: return "NonIncreasingIndices";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::NonScalarEntries: return "NonScalarEntries";
    case Errc::DegreeTooLarge: return "DegreeTooLarge";
    case Errc::GroupTooLarge: return "GroupTooLarge";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::BadCharacteristic: return "BadCharacteristic";
    case Errc::DuplicateLambdas: return "DuplicateLambdas";
    case Errc::BadPartition: return "BadPartition";
    case Errc::HypothesisViolation: return "HypothesisViolation";
    case Errc::DegenerateLambdas: return "DegenerateLambdas";
    case Errc::Parse: return "Parse";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace grassid
