#include "semireg/ff3.hpp"

#include <sstream>

namespace semireg {

std::string to_string(const F3Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = p.degree(); d >= 0; --d) {
    const F3 c = p.coeff(d);
    if (c.is_zero()) continue;
    const bool negative = c == F3(2);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (d == 0) {
      os << 1;
    } else {
      os << 'T';
      if (d > 1) os << '^' << d;
    }
  }
  return os.str();
}

F3Matrix build_J(int m) {
  if (m < 1 || m > 16) throw ParameterError("build_J: m must lie in [1, 16]");
  const Eigen::Index n = Eigen::Index{1} << m;
  F3Matrix j(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      // (-1)^k only depends on the parity of the index gap.
      const bool odd_gap = ((r > c ? r - c : c - r) & 1) != 0;
      const F3 sign = odd_gap ? F3(-1) : F3(1);
      if (r > c)
        j(r, c) = sign;
      else if (c > r)
        j(r, c) = -sign;
      else
        j(r, c) = F3(0);
    }
  }
  return j;
}

bool is_irreducible(const std::vector<F3Matrix>& gens) {
  if (gens.empty()) throw ParameterError("is_irreducible: no generators");
  const Eigen::Index n = gens.front().rows();
  for (const auto& g : gens)
    if (g.rows() != n || g.cols() != n)
      throw ParameterError("is_irreducible: generators must be square of equal size");
  if (n > 10) throw CapacityError("is_irreducible: dimension above 10 is not enumerable");
  if (n == 0) return false;

  // One representative per line: first nonzero coordinate equal to 1.
  F3Vec w = F3Vec::Constant(n, F3(0));
  for (Eigen::Index lead = n - 1; lead >= 0; --lead) {
    const Eigen::Index tail = n - 1 - lead;
    long long count = 1;
    for (Eigen::Index i = 0; i < tail; ++i) count *= 3;
    for (long long code = 0; code < count; ++code) {
      w.setConstant(F3(0));
      w(lead) = F3(1);
      long long c = code;
      for (Eigen::Index i = lead + 1; i < n; ++i) {
        w(i) = F3(static_cast<int>(c % 3));
        c /= 3;
      }
      if (static_cast<Eigen::Index>(spin(w, gens).size()) != n) return false;
    }
  }
  return true;
}

}  // namespace semireg
