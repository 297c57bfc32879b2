#include "beamlattice/symbols.hpp"

namespace beamlattice {

std::string_view to_string(SymbolKind k) {
  switch (k) {
    case SymbolKind::discrete:
      return "discrete";
    case SymbolKind::continuum:
      return "continuum";
    case SymbolKind::kumar_mcdowell:
      return "km";
  }
  return "unknown";
}

SymbolKind symbol_kind_from_string(std::string_view s) {
  if (s == "discrete") return SymbolKind::discrete;
  if (s == "continuum") return SymbolKind::continuum;
  if (s == "km" || s == "kumar_mcdowell") return SymbolKind::kumar_mcdowell;
  throw InvalidArgument("unknown model '" + std::string(s) + "' (expected discrete, continuum or km)");
}

}  // namespace beamlattice
