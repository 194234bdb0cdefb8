#include "xling/common.hpp"

namespace xling {

LanguageId::LanguageId(std::string_view code) : code_(code) {
  if (code.size() != 2 || code[0] < 'a' || code[0] > 'z' || code[1] < 'a' ||
      code[1] > 'z') {
    throw DataError("language tag must be two ASCII lowercase letters, got '" +
                    std::string(code) + "'");
  }
}

std::string_view kind_name(SymbolKind kind) {
  return kind == SymbolKind::Word ? "word" : "entity";
}

SymbolKind parse_kind(std::string_view name) {
  if (name == "word") return SymbolKind::Word;
  if (name == "entity") return SymbolKind::Entity;
  throw DataError("unknown symbol kind '" + std::string(name) + "'");
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

}  // namespace xling
