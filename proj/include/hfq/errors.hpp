#pragma once

#include <stdexcept>
#include <string>

namespace hfq {

enum class Errc {
  invalid_parameters,
  invalid_diagram,
  not_one_pointed,
  bad_index,
  different_spinc_class,
  non_torsion_class,
  infinite_order,
  invalid_cocycle,
  disconnected_cover,
  search_failed,
  parse_error,
  internal,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_parameters: return "InvalidParameters";
    case Errc::invalid_diagram: return "InvalidDiagram";
    case Errc::not_one_pointed: return "NotOnePointed";
    case Errc::bad_index: return "BadIndex";
    case Errc::different_spinc_class: return "DifferentSpincClass";
    case Errc::non_torsion_class: return "NonTorsionClass";
    case Errc::infinite_order: return "InfiniteOrder";
    case Errc::invalid_cocycle: return "InvalidCocycle";
    case Errc::disconnected_cover: return "DisconnectedCover";
    case Errc::search_failed: return "SearchFailed";
    case Errc::parse_error: return "ParseError";
    case Errc::internal: return "InternalError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace hfq
