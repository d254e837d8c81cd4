#pragma once

#include <stdexcept>
#include <string>

namespace mmbebhe {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Pixel count exceeds the bound that keeps SMBE inside 32 bits.
class ImageTooLarge : public Error {
public:
    using Error::Error;
};

/// Segment bounds outside [0, 255] or lo > hi.
class InvalidBounds : public Error {
public:
    using Error::Error;
};

/// Two images compared elementwise do not share dimensions.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// PGM header is not parseable.
class MalformedHeader : public Error {
public:
    using Error::Error;
};

/// PGM maxval is not 255; other bit depths are rejected, not rescaled.
class UnsupportedMaxval : public Error {
public:
    using Error::Error;
};

/// Raster (or sample list) ends before width*height values.
class TruncatedData : public Error {
public:
    using Error::Error;
};

}  // namespace mmbebhe
