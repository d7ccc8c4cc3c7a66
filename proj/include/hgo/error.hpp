#ifndef HGO_ERROR_HPP
#define HGO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hgo {

enum class Errc {
  // input validation
  NegativeColor,
  AsymmetricUndirectedEdge,
  DuplicateEdge,
  SelfLoop,
  VertexOutOfRange,
  DuplicateVertex,
  BadLength,
  BadPermutation,
  OrderTooLarge,
  TypeTooLarge,
  KExceedsOrder,
  ColorOutOfBounds,
  InvalidArgument,
  // files and formats
  ParseError,
  IoError,
  CacheDirMissing,
  CorruptCatalog,
};

const char* errcName(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errcName(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace hgo

#endif  // HGO_ERROR_HPP
