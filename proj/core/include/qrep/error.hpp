#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qrep {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: unparseable files, bad scalars, invalid flag values.
// The CLI maps these to exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

// Parse failure in a specific file; carries file/line/token so the CLI can
// point at the offending spot.
class ParseError : public InputError {
public:
    ParseError(std::string file, std::size_t line, std::string token, const std::string& what)
        : InputError(file + ":" + std::to_string(line) + ": " + what +
                     (token.empty() ? "" : " (near '" + token + "')")),
          file_(std::move(file)),
          line_(line),
          token_(std::move(token)) {}

    const std::string& file() const noexcept { return file_; }
    std::size_t line() const noexcept { return line_; }
    const std::string& token() const noexcept { return token_; }

private:
    std::string file_;
    std::size_t line_;
    std::string token_;
};

// Violated operation precondition. The CLI maps these to exit code 3.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class CyclicQuiverError : public PreconditionError {
public:
    CyclicQuiverError() : PreconditionError("quiver contains a directed cycle") {}
    using PreconditionError::PreconditionError;
};

class NotConnectedError : public PreconditionError {
public:
    NotConnectedError() : PreconditionError("quiver is not connected") {}
    using PreconditionError::PreconditionError;
};

class SinkVertexError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class UnknownVertexError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class DimensionMismatchError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class FieldMismatchError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class RankDeficientError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class QuiverMismatchError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class MorphismError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class RelationsViolatedError : public PreconditionError {
public:
    RelationsViolatedError(std::size_t index, const std::string& rendered)
        : PreconditionError("relation " + std::to_string(index) + " violated: " + rendered),
          index_(index) {}

    std::size_t relation_index() const noexcept { return index_; }

private:
    std::size_t index_;
};

// Reserved: concrete module computations are only offered over a field.
class NonFieldError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// A verified postcondition failed; indicates a bug, never bad input.
// The CLI maps these to exit code 4.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace qrep
