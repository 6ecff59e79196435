//  Copyright 2026 The openq Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "openq/error.hpp"

namespace openq {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorKind::NoBottom: return "NoBottom";
    case ErrorKind::MissingJoin: return "MissingJoin";
    case ErrorKind::NotSupPreserving: return "NotSupPreserving";
    case ErrorKind::NotMeetClosed: return "NotMeetClosed";
    case ErrorKind::InvalidQuantale: return "InvalidQuantale";
    case ErrorKind::InvalidHomomorphism: return "InvalidHomomorphism";
    case ErrorKind::InvalidGroupTable: return "InvalidGroupTable";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotContinuous: return "NotContinuous";
    case ErrorKind::NotOpen: return "NotOpen";
    case ErrorKind::InvalidTopology: return "InvalidTopology";
    case ErrorKind::HypothesisFailure: return "HypothesisFailure";
    case ErrorKind::NotUnital: return "NotUnital";
    case ErrorKind::NotALocale: return "NotALocale";
    case ErrorKind::MissingDirectImage: return "MissingDirectImage";
    case ErrorKind::EnumerationBoundExceeded: return "EnumerationBoundExceeded";
    case ErrorKind::NotBimorphism: return "NotBimorphism";
    case ErrorKind::TruncationOverflow: return "TruncationOverflow";
    case ErrorKind::NotAlternating: return "NotAlternating";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Usage: return "Usage";
  }
  return "Unknown";
}

}  // namespace openq
