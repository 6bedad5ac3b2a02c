#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace locdesc {

// Errors raised while reading corpus files (IOB or JSON) or while
// constructing annotated messages from span lists.
enum class CorpusErrorKind {
  MalformedLine,     // line is neither token<TAB>tag, id directive, nor blank
  UnknownTag,        // tag outside the O / B-Location-Ck / I-Location-Ck set
  DanglingInside,    // I- tag without a compatible preceding B-/I- tag
  DuplicateId,       // two messages share an id
  OverlappingSpans,  // span token/char ranges intersect
  UnknownId,         // an id that does not occur in the corpus
  BadJson,           // JSON input does not match the expected shape
};

class CorpusError : public std::runtime_error {
 public:
  CorpusError(CorpusErrorKind kind, std::size_t line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        kind_(kind),
        line_(line) {}

  CorpusErrorKind kind() const { return kind_; }
  // 1-based line in the source file; 0 when no file position applies.
  std::size_t line() const { return line_; }

 private:
  CorpusErrorKind kind_;
  std::size_t line_;
};

// Raised by serialize_answer: the answer grammar separates location
// descriptions with ';', so a surface containing one cannot round-trip.
class SemicolonInSurface : public std::runtime_error {
 public:
  explicit SemicolonInSurface(const std::string& surface)
      : std::runtime_error("surface contains ';' and cannot be serialized: " + surface) {}
};

// Errors from the remote completion-endpoint extractor.
enum class RemoteErrorKind {
  EndpointUnreachable,  // connection could not be established at all
  AuthMissing,          // configured token env var is unset or empty
  BadResponseShape,     // response text path yields nothing usable
  RetriesExhausted,     // transient failures persisted past max_retries
  HttpStatus,           // non-transient HTTP status (4xx other than 429)
  BadConfig,            // config file invalid (e.g. template lacks {{PROMPT}})
};

class RemoteError : public std::runtime_error {
 public:
  RemoteError(RemoteErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  RemoteErrorKind kind() const { return kind_; }

 private:
  RemoteErrorKind kind_;
};

// Raised by overlap_ratio when either range is empty.
class EmptyRange : public std::runtime_error {
 public:
  EmptyRange() : std::runtime_error("overlap ratio is undefined for empty ranges") {}
};

}  // namespace locdesc
