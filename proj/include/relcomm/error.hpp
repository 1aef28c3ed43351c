// Error type shared by every relcomm component.

#ifndef RELCOMM_ERROR_HPP_
#define RELCOMM_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace relcomm {

enum class Errc {
  not_latin_square,
  no_identity,
  not_associative,
  closure_cap_exceeded,
  not_a_subgroup,
  not_normal,
  parse_error,
  unsupported_parameter,
  not_nilpotent,
  cap_exceeded,
  work_cap_exceeded,
  degenerate_pair,
  hypothesis_not_met,
  domain_mismatch,
  file_not_found,
  invalid_argument,
};

// Stable identifiers printed by the CLI; do not rename.
inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::not_latin_square: return "E_NOT_LATIN_SQUARE";
    case Errc::no_identity: return "E_NO_IDENTITY";
    case Errc::not_associative: return "E_NOT_ASSOCIATIVE";
    case Errc::closure_cap_exceeded: return "E_CLOSURE_CAP_EXCEEDED";
    case Errc::not_a_subgroup: return "E_NOT_A_SUBGROUP";
    case Errc::not_normal: return "E_NOT_NORMAL";
    case Errc::parse_error: return "E_PARSE_ERROR";
    case Errc::unsupported_parameter: return "E_UNSUPPORTED_PARAMETER";
    case Errc::not_nilpotent: return "E_NOT_NILPOTENT";
    case Errc::cap_exceeded: return "E_CAP_EXCEEDED";
    case Errc::work_cap_exceeded: return "E_WORK_CAP_EXCEEDED";
    case Errc::degenerate_pair: return "E_DEGENERATE_PAIR";
    case Errc::hypothesis_not_met: return "E_HYPOTHESIS_NOT_MET";
    case Errc::domain_mismatch: return "E_DOMAIN_MISMATCH";
    case Errc::file_not_found: return "E_FILE_NOT_FOUND";
    case Errc::invalid_argument: return "E_INVALID_ARGUMENT";
  }
  return "E_UNKNOWN";
}

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg)
    : std::runtime_error(msg), code_(code) {}
  Errc code() const noexcept { return code_; }
private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

} // namespace relcomm

#endif
