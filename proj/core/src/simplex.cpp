#include "kissing/simplex.hpp"

#include <stdexcept>

namespace kissing {

int ambient_dim(const SimplexPair& pair) {
  return static_cast<int>(pair.p.at(0).size());
}

void validate(const SimplexPair& pair) {
  if (pair.k < 1) throw std::invalid_argument("SimplexPair: k must be >= 1");
  if (pair.p.empty() || pair.q.empty()) {
    throw std::invalid_argument("SimplexPair: empty vertex list");
  }
  const std::size_t d = pair.p.front().size();
  if (d == 0) throw std::invalid_argument("SimplexPair: zero-dimensional vertex");
  for (const auto* list : {&pair.p, &pair.q}) {
    for (const auto& v : *list) {
      if (v.size() != d) {
        throw std::invalid_argument("SimplexPair: inconsistent vertex dimensions");
      }
      for (const int c : v) {
        if (c < 0 || c > pair.k) {
          throw std::invalid_argument("SimplexPair: coordinate outside [0, k]");
        }
      }
    }
  }
}

}  // namespace kissing
