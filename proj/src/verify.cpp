#include "uberdh/verify.hpp"

#include <sstream>

#include "uberdh/domination.hpp"
#include "uberdh/double_homology.hpp"
#include "uberdh/mvss.hpp"
#include "uberdh/uber.hpp"

namespace uberdh {

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass:
      return "pass";
    case ClaimStatus::Fail:
      return "fail";
    case ClaimStatus::Skipped:
      break;
  }
  return "skipped";
}

std::size_t VerificationReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : claims) n += c.status == ClaimStatus::Fail;
  return n;
}

const ClaimResult* VerificationReport::find(const std::string& id) const {
  for (const auto& c : claims)
    if (c.id == id) return &c;
  return nullptr;
}

namespace {

std::string show(const GroupClass& g) { return g.to_string(); }

GroupClass lookup(const BigradedTable& t, std::pair<int, int> key, Coefficients c) {
  auto it = t.find(key);
  return it == t.end() ? GroupClass::zero(c) : it->second;
}

ClaimResult skipped(std::string id, std::string statement, std::string why) {
  ClaimResult r;
  r.id = std::move(id);
  r.statement = std::move(statement);
  r.hypotheses = false;
  r.status = ClaimStatus::Skipped;
  r.details.push_back(std::move(why));
  return r;
}

void settle(ClaimResult& r) { r.status = r.details.empty() ? ClaimStatus::Pass : ClaimStatus::Fail; }

// DH(k, l) against reduced E^2 at (m - l - 1, l - k - 1).
ClaimResult double_vs_reduced_e2(int m, Coefficients c, const BigradedTable& dh, const BigradedTable& e2) {
  ClaimResult r;
  r.id = "double-vs-reduced-e2";
  r.statement = "double homology equals the reduced augmented E2 page of the anti-star cover";
  std::map<std::pair<int, int>, bool> keys;
  for (const auto& [kl, g] : dh) keys[kl] = true;
  for (const auto& [pq, g] : e2) keys[{m - pq.first - 1 - pq.second - 1, m - pq.first - 1}] = true;
  for (const auto& [kl, unused] : keys) {
    const auto [k, l] = kl;
    const auto a = lookup(dh, kl, c);
    const auto b = lookup(e2, {m - l - 1, l - k - 1}, c);
    if (a != b) {
      std::ostringstream os;
      os << "DH(" << -k << "," << 2 * l << ") = " << show(a) << " but E2(" << m - l - 1 << "," << l - k - 1
         << ") = " << show(b);
      r.details.push_back(os.str());
    }
  }
  settle(r);
  return r;
}

// B(j, i) against unreduced E^2 at (m - j - 1, i).
ClaimResult uber_vs_unreduced_e2(int m, Coefficients c, const BigradedTable& b, const BigradedTable& e2) {
  ClaimResult r;
  r.id = "uber-vs-unreduced-e2";
  r.statement = "0-degree uberhomology equals the unreduced augmented E2 page of the anti-star cover";
  std::map<std::pair<int, int>, bool> keys;
  for (const auto& [ji, g] : b) keys[ji] = true;
  for (const auto& [pq, g] : e2) keys[{m - pq.first - 1, pq.second}] = true;
  for (const auto& [ji, unused] : keys) {
    const auto [j, i] = ji;
    const auto x = lookup(b, ji, c);
    const auto y = lookup(e2, {m - j - 1, i}, c);
    if (x != y) {
      std::ostringstream os;
      os << "B(j=" << j << ",i=" << i << ") = " << show(x) << " but E2(" << m - j - 1 << "," << i << ") = " << show(y);
      r.details.push_back(os.str());
    }
  }
  settle(r);
  return r;
}

// B(j, i) against DH(j - i - 1, j), compared for i >= 1; i in {0, -1} noted.
ClaimResult uber_vs_double(Coefficients c, const BigradedTable& b, const BigradedTable& dh) {
  ClaimResult r;
  r.id = "uber-vs-double";
  r.statement = "0-degree uberhomology B(j,i) equals DH(i-j+1, 2j) for i outside {0,-1}";
  std::map<std::pair<int, int>, bool> keys;  // (j, i)
  for (const auto& [ji, g] : b) keys[ji] = true;
  for (const auto& [kl, g] : dh) keys[{kl.second, kl.second - kl.first - 1}] = true;
  for (const auto& [ji, unused] : keys) {
    const auto [j, i] = ji;
    const auto x = lookup(b, ji, c);
    const auto y = lookup(dh, {j - i - 1, j}, c);
    if (x == y) continue;
    std::ostringstream os;
    os << "B(j=" << j << ",i=" << i << ") = " << show(x) << ", DH(" << i - j + 1 << "," << 2 * j
       << ") = " << show(y);
    if (i == 0 || i == -1) {
      r.notes.push_back(os.str() + " (excluded degree)");
    } else {
      r.details.push_back(os.str());
    }
  }
  settle(r);
  return r;
}

template <class Scalar>
VerificationReport verify_with(const SimplicialComplex& k, const Ring<Scalar>& ring, VerifyOptions options) {
  VerificationReport report;
  report.coefficients = ring.coefficients();
  const Coefficients c = ring.coefficients();
  const int m = k.vertex_count();
  const bool simplex = is_simplex(k);
  const bool connected = is_connected(k);

  TableOptions topt;
  topt.max_vertices = options.max_vertices;
  const SubsetHomologyTable<Scalar> reduced(k, true, ring, topt);
  const SubsetHomologyTable<Scalar> unreduced(k, false, ring, topt);
  const BigradedTable dh = double_homology(reduced);
  const BigradedTable b = uber_zero_degree(unreduced);
  const auto e1_red = e1_page(reduced, false);
  const auto e1_unred = e1_page(unreduced, false);
  const auto e2_red = e2_page(reduced);
  const auto e2_unred = e2_page(unreduced);

  if (simplex) {
    report.claims.push_back(skipped("double-vs-reduced-e2",
                                    "double homology equals the reduced augmented E2 page of the anti-star cover",
                                    "K is a simplex"));
  } else {
    report.claims.push_back(double_vs_reduced_e2(m, c, dh, e2_red.entries));
  }

  if (!connected) {
    report.claims.push_back(skipped("uber-vs-unreduced-e2",
                                    "0-degree uberhomology equals the unreduced augmented E2 page of the anti-star cover",
                                    "K is disconnected"));
    report.claims.push_back(skipped("uber-vs-double",
                                    "0-degree uberhomology B(j,i) equals DH(i-j+1, 2j) for i outside {0,-1}",
                                    "K is disconnected"));
  } else {
    report.claims.push_back(uber_vs_unreduced_e2(m, c, b, e2_unred.entries));
    report.claims.push_back(uber_vs_double(c, b, dh));
  }

  {
    const std::string statement = "the reduced augmented spectral sequence of the anti-star cover converges to 0";
    if (simplex) {
      report.claims.push_back(skipped("reduced-mvss-acyclic", statement, "K is a simplex"));
    } else {
      ClaimResult r;
      r.id = "reduced-mvss-acyclic";
      r.statement = statement;
      bool acyclic = false;
      if constexpr (Ring<Scalar>::is_field) {
        acyclic = total_acyclicity_check(k, ring, options.max_vertices);
      } else {
        acyclic = total_acyclicity_check(k, Ring<Rational>{}, options.max_vertices);
        r.notes.push_back("checked over Q");
      }
      if (!acyclic) r.details.push_back("total complex has nonzero homology");
      settle(r);
      report.claims.push_back(std::move(r));
    }
  }

  {
    ClaimResult r;
    r.id = "double-detects-simplex";
    r.statement = "double homology is the coefficient ring in bidegree (0,0) alone iff K is a simplex";
    const BigradedTable unit{{{0, 0}, GroupClass(c, 1)}};
    const bool trivial = dh == unit;
    if (trivial != simplex) {
      r.details.push_back(std::string("DH is ") + (trivial ? "" : "not ") + "concentrated in (0,0), K is " +
                          (simplex ? "" : "not ") + "a simplex");
    }
    settle(r);
    report.claims.push_back(std::move(r));
  }

  {
    const std::string statement = "chi(E1 row 0) - chi(reduced E1 row 0) = (-1)^m";
    if (!connected || k.is_empty()) {
      report.claims.push_back(skipped("euler-row-zero", statement, "K is disconnected"));
    } else {
      ClaimResult r;
      r.id = "euler-row-zero";
      r.statement = statement;
      const long long lhs = euler_row0(e1_unred) - euler_row0(e1_red);
      const long long rhs = m % 2 == 0 ? 1 : -1;
      if (lhs != rhs) r.details.push_back("difference " + std::to_string(lhs) + ", expected " + std::to_string(rhs));
      settle(r);
      report.claims.push_back(std::move(r));
    }
  }

  {
    const std::string statement = "diagonal Euler characteristic of DH over Q = -D_c(1-skeleton)(-1) - 1";
    if (!connected) {
      report.claims.push_back(skipped("diagonal-domination", statement, "K is disconnected"));
    } else if (simplex) {
      report.claims.push_back(skipped("diagonal-domination", statement, "K is a simplex"));
    } else if (m > kMaxDominationVertices) {
      report.claims.push_back(skipped("diagonal-domination", statement, "too many vertices for enumeration"));
    } else {
      ClaimResult r;
      r.id = "diagonal-domination";
      r.statement = statement;
      const auto check = condom_check(k, options.max_vertices);
      if (!check.equal())
        r.details.push_back("lhs " + std::to_string(check.lhs) + ", rhs " + std::to_string(check.rhs()));
      if (!check.printed_form_holds())
        r.notes.push_back("the form D_c(-1) + (-1)^(m+1) gives " + std::to_string(check.printed_rhs()) +
                          ", the diagonal sum is " + std::to_string(check.lhs));
      settle(r);
      report.claims.push_back(std::move(r));
    }
  }

  {
    ClaimResult r;
    r.id = "uber-detects-simplex";
    r.statement = "0-degree uberhomology is nonzero and concentrated in B(1,0) iff K is a simplex";
    const bool concentrated = b.size() == 1 && b.count({1, 0}) == 1;
    if (concentrated != simplex) {
      r.details.push_back(std::string("B is ") + (concentrated ? "" : "not ") + "concentrated in (1,0), K is " +
                          (simplex ? "" : "not ") + "a simplex");
    }
    if (simplex && concentrated) r.notes.push_back("B(1,0) = " + show(b.begin()->second));
    settle(r);
    report.claims.push_back(std::move(r));
  }

  {
    const std::string statement = "DH of the flag complex of a chordal graph is the ring in (0,0) and (-1,4) only";
    const Graph g = one_skeleton(k);
    const bool flag = flag_complex(g) == k;
    if (!flag || !g.is_chordal() || simplex || !connected) {
      report.claims.push_back(skipped("chordal-flag-rank-two", statement,
                                      "K is not the flag complex of a connected chordal graph, or is a simplex"));
    } else {
      ClaimResult r;
      r.id = "chordal-flag-rank-two";
      r.statement = statement;
      const BigradedTable expected{{{0, 0}, GroupClass(c, 1)}, {{1, 2}, GroupClass(c, 1)}};
      if (dh != expected) {
        for (const auto& [kl, g2] : dh)
          r.details.push_back("DH(" + std::to_string(-kl.first) + "," + std::to_string(2 * kl.second) +
                              ") = " + show(g2));
      }
      settle(r);
      report.claims.push_back(std::move(r));
    }
  }

  if (options.all) {
    ClaimResult r;
    r.id = "uber-weight-zero-slice";
    r.statement = "the weight-0 slice of full uberhomology equals the subset-table computation";
    UberOptions uopt;
    uopt.max_vertices = options.max_vertices;
    const TriGradedTable full = uberhomology(k, ring, uopt);
    BigradedTable slice;
    for (const auto& [jki, g] : full) {
      const auto [j, w, i] = jki;
      if (w == 0) slice[{j, i}] = g;
    }
    if (slice != b) {
      for (const auto& [ji, g] : slice)
        if (lookup(b, ji, c) != g)
          r.details.push_back("(j=" + std::to_string(ji.first) + ",i=" + std::to_string(ji.second) + ") full " +
                              show(g) + ", subset table " + show(lookup(b, ji, c)));
      for (const auto& [ji, g] : b)
        if (!slice.count(ji))
          r.details.push_back("(j=" + std::to_string(ji.first) + ",i=" + std::to_string(ji.second) +
                              ") full 0, subset table " + show(g));
    }
    settle(r);
    report.claims.push_back(std::move(r));
  }
  return report;
}

}  // namespace

VerificationReport verify_all(const SimplicialComplex& k, Coefficients coeffs, VerifyOptions options) {
  return visit_ring(coeffs, [&](auto ring) { return verify_with(k, ring, options); });
}

}  // namespace uberdh
