// Copyright (c) 2026 The holoflow authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace holoflow {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ShapeError : Error {
  using Error::Error;
};

struct NotHermitian : Error {
  using Error::Error;
};

struct NotUnitary : Error {
  using Error::Error;
};

struct NotOrthonormal : Error {
  using Error::Error;
};

struct EmptySpan : Error {
  using Error::Error;
};

struct NoRoomForExtension : Error {
  using Error::Error;
};

struct LoopNotClosed : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace holoflow
