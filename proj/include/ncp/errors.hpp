#pragma once

#include <stdexcept>
#include <string>

namespace ncp {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text (grammar violation).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

// Well-formed text that does not describe a partition of [n]
// (duplicate, missing or out-of-range elements).
class NotAPartition : public ParseError {
public:
    explicit NotAPartition(const std::string& what) : ParseError(what) {}
};

// A pair of blocks crosses.
class Crossing : public ParseError {
public:
    explicit Crossing(const std::string& what) : ParseError(what) {}
};

// A configured combinatorial guard was exceeded.
class DegreeOverflow : public Error {
public:
    explicit DegreeOverflow(const std::string& what) : Error(what) {}
};

// Requested series order exceeds the configured bound.
class OrderOverflow : public DegreeOverflow {
public:
    explicit OrderOverflow(const std::string& what) : DegreeOverflow(what) {}
};

// A block equivalence whose classwise fusion is not noncrossing.
class NotContractible : public Error {
public:
    explicit NotContractible(const std::string& what) : Error(what) {}
};

// Convolution inverse requested for a character that has none.
class NonInvertible : public Error {
public:
    explicit NonInvertible(const std::string& what) : Error(what) {}
};

// Iterated reduced coproduct applied outside the augmentation ideal.
class NotAugmentation : public Error {
public:
    explicit NotAugmentation(const std::string& what) : Error(what) {}
};

// Unknown verification suite name.
class UnknownSuite : public Error {
public:
    explicit UnknownSuite(const std::string& what) : Error(what) {}
};

} // namespace ncp
