#include "uberdh/domination.hpp"

#include <bit>
#include <sstream>

#include "uberdh/double_homology.hpp"
#include "uberdh/errors.hpp"
#include "uberdh/parallel.hpp"

namespace uberdh {

IntPolynomial::IntPolynomial(std::vector<long long> coefficients) : c_(std::move(coefficients)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

long long IntPolynomial::coefficient(int s) const {
  return s >= 0 && s < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(s)] : 0;
}

long long IntPolynomial::evaluate(long long x) const {
  long long acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t s = 0; s < c_.size(); ++s) {
    long long c = c_[s];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    const long long a = c < 0 ? -c : c;
    if (s == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a;
    os << 't';
    if (s > 1) os << '^' << s;
  }
  return os.str();
}

bool is_connected_dominating(const Graph& g, std::uint64_t subset) {
  if (subset == 0) return false;
  const int n = g.vertex_count();
  const std::uint64_t all = n == 64 ? ~0ULL : ((1ULL << n) - 1);
  std::uint64_t closed = subset;
  for (std::uint64_t s = subset; s != 0; s &= s - 1) closed |= g.neighbours(std::countr_zero(s));
  return closed == all && g.is_connected_on(subset);
}

IntPolynomial domination_polynomial(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kMaxDominationVertices) throw SizeCap(n, kMaxDominationVertices);
  if (!g.is_connected()) throw Disconnected();
  const std::uint64_t total = 1ULL << n;
  // fixed chunking keeps the accumulation independent of the thread count
  const std::size_t chunks = 64;
  std::vector<std::vector<long long>> partial(chunks, std::vector<long long>(static_cast<std::size_t>(n) + 1, 0));
  parallel_for(chunks, [&](std::size_t c) {
    const std::uint64_t lo = total * c / chunks, hi = total * (c + 1) / chunks;
    for (std::uint64_t s = lo; s < hi; ++s)
      if (is_connected_dominating(g, s)) ++partial[c][static_cast<std::size_t>(std::popcount(s))];
  });
  std::vector<long long> coeffs(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& p : partial)
    for (std::size_t s = 0; s < p.size(); ++s) coeffs[s] += p[s];
  return IntPolynomial(std::move(coeffs));
}

DominationCheck condom_check(const SimplicialComplex& k, int max_vertices) {
  if (!is_connected(k)) throw Disconnected();
  if (is_simplex(k)) throw IsSimplex();
  const int m = k.vertex_count();
  DominationCheck out;
  out.m = m;
  TableOptions options;
  options.max_vertices = max_vertices;
  out.lhs = diagonal_euler(double_homology(k, Ring<Rational>{}, options));
  out.at_minus_one = domination_polynomial(one_skeleton(k)).evaluate(-1);
  return out;
}

}  // namespace uberdh
