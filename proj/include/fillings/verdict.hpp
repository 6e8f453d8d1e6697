#pragma once

namespace fillings {

enum class Verdict { obstructed, inconclusive, satisfiable };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::obstructed: return "OBSTRUCTED";
    case Verdict::satisfiable: return "SATISFIABLE";
    default: return "INCONCLUSIVE";
  }
}

}  // namespace fillings
