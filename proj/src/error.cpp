#include "hgo/error.hpp"

namespace hgo {

const char* errcName(Errc c) {
  switch (c) {
    case Errc::NegativeColor: return "NegativeColor";
    case Errc::AsymmetricUndirectedEdge: return "AsymmetricUndirectedEdge";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::DuplicateVertex: return "DuplicateVertex";
    case Errc::BadLength: return "BadLength";
    case Errc::BadPermutation: return "BadPermutation";
    case Errc::OrderTooLarge: return "OrderTooLarge";
    case Errc::TypeTooLarge: return "TypeTooLarge";
    case Errc::KExceedsOrder: return "KExceedsOrder";
    case Errc::ColorOutOfBounds: return "ColorOutOfBounds";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
    case Errc::CacheDirMissing: return "CacheDirMissing";
    case Errc::CorruptCatalog: return "CorruptCatalog";
  }
  return "UnknownError";
}

}  // namespace hgo
