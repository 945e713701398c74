#pragma once

#include <stdexcept>
#include <string>

namespace surfcover {

// Domain errors. CLI maps these to exit code 1, malformed input to 2,
// precision exhaustion to 3.
struct EmptyWordError : std::invalid_argument {
  EmptyWordError() : std::invalid_argument("word is trivial after reduction") {}
};

struct DifferentBaseError : std::invalid_argument {
  explicit DifferentBaseError(const std::string& what) : std::invalid_argument(what) {}
};

struct NotSimpleWordError : std::invalid_argument {
  explicit NotSimpleWordError(const std::string& w)
      : std::invalid_argument("word is not certified simple: " + w) {}
};

struct EqualClassesError : std::invalid_argument {
  EqualClassesError()
      : std::invalid_argument(
            "the two classes coincide; use the self intersection routine") {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct IncompleteCacheError : std::invalid_argument {
  explicit IncompleteCacheError(const std::string& what)
      : std::invalid_argument(what) {}
};

struct UnknownVertexError : std::invalid_argument {
  explicit UnknownVertexError(int index)
      : std::invalid_argument("index " + std::to_string(index) +
                              " is not a vertex of the graph") {}
};

struct CoverError : std::runtime_error {
  explicit CoverError(const std::string& what) : std::runtime_error(what) {}
};

struct GroupError : std::runtime_error {
  explicit GroupError(const std::string& what) : std::runtime_error(what) {}
};

struct PrecisionExhausted : std::runtime_error {
  explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace surfcover
