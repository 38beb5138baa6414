// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace boir {

/// Base of all boir errors. `UserError` subtypes indicate bad input data or
/// configuration (CLI exit 2); everything else is an internal failure (exit 1).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UserError : Error {
    using Error::Error;
};

struct IoError : UserError {
    using UserError::UserError;
};

struct ParseError : UserError {
    std::size_t line;
    ParseError(std::size_t line_no, const std::string& reason)
        : UserError("line " + std::to_string(line_no) + ": " + reason), line(line_no) {}
};

struct MonotonicityError : UserError {
    std::size_t line;
    MonotonicityError(std::size_t line_no, const std::string& reason)
        : UserError("line " + std::to_string(line_no) + ": " + reason), line(line_no) {}
};

struct DuplicateDocno : UserError {
    std::string docno;
    explicit DuplicateDocno(const std::string& id)
        : UserError("duplicate docno: " + id), docno(id) {}
};

struct EmptyCollection : Error {
    EmptyCollection() : Error("collection has no indexed terms") {}
};

struct EmptyQuery : UserError {
    explicit EmptyQuery(const std::string& what = "no query token survives preprocessing")
        : UserError(what) {}
};

struct DegenerateSmoothing : UserError {
    explicit DegenerateSmoothing(const std::string& what) : UserError(what) {}
};

struct NoRelevant : UserError {
    std::string topic;
    explicit NoRelevant(const std::string& t)
        : UserError("topic " + t + " has no relevant documents"), topic(t) {}
};

struct NoOverlap : UserError {
    NoOverlap() : UserError("run and qrels share no evaluable topic") {}
};

struct EmptyRun : UserError {
    explicit EmptyRun(const std::string& what = "run has no rankings") : UserError(what) {}
};

struct InvalidPoint : UserError {
    explicit InvalidPoint(const std::string& what) : UserError(what) {}
};

struct SingularKernel : Error {
    explicit SingularKernel(const std::string& what) : Error(what) {}
};

struct ObjectiveError : Error {
    explicit ObjectiveError(const std::string& what) : Error(what) {}
};

}  // namespace boir
