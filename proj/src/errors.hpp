#pragma once

#include <stdexcept>
#include <string>

namespace realspher {

enum class Errc {
  InvalidSpec,
  AmbientMismatch,
  NotIrreducible,
  NotApplicable,
  InvalidDatum,
  IncompleteDatum,
  DatumUnavailable,
  ContradictionDetected,
  Parse,
  Schema,
  Io,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc c, const std::string& msg) : std::runtime_error(msg), code_(c) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

}  // namespace realspher
