#pragma once

#include <string_view>

namespace fintop {

/// Outcome of a hypothesis-gated check. Vacuous means the hypothesis did
/// not hold, so nothing was asserted.
enum class Verdict { pass, fail, vacuous };

constexpr std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::vacuous: return "vacuous";
  }
  return "?";
}

constexpr Verdict verdict(bool ok) noexcept { return ok ? Verdict::pass : Verdict::fail; }
constexpr Verdict gated(bool hypothesis, bool ok) noexcept {
  return hypothesis ? verdict(ok) : Verdict::vacuous;
}

}  // namespace fintop
