// Acceptance suite: each numbered check prints one PASS/FAIL line; the
// process exits nonzero when any check fails. The two long-running complete
// graphs are opt-in: TORICGRAPH_K7=1 adds K7, TORICGRAPH_STRETCH=1 adds K8.
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "toricgraph/enumerate.hpp"
#include "toricgraph/oracle.hpp"

using namespace toric;

namespace {

int failures = 0;

void report(int num, const std::string& desc, bool pass) {
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", num, desc.c_str());
  if (!pass) ++failures;
}

void skip(int num, const std::string& desc) {
  std::printf("SKIP criterion %d: %s\n", num, desc.c_str());
}

bool subset(const std::vector<Binomial>& a, const std::vector<Binomial>& b) {
  for (const auto& x : a)
    if (std::find(b.begin(), b.end(), x) == b.end()) return false;
  return true;
}

struct NamedGraph {
  std::string name;
  Graph g;
};

constexpr long long kPairs = 20'000'000;
constexpr long long kPivots = 1'000'000;

Graph cycle_graph(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  return make_graph(k, edges);
}

Binomial family33_full(const Graph& f) {
  return binomial_of_walk(f, {3, 4, 5, 0, 6, 7, 8, 1, 9, 10, 11, 2});
}

}  // namespace

int main() {
  const bool with_k7 = std::getenv("TORICGRAPH_K7") != nullptr;
  const bool with_k8 = std::getenv("TORICGRAPH_STRETCH") != nullptr;
  EnumCaps caps;
  caps.candidate_budget = 2'000'000'000LL;
  caps.cycle_budget = 100'000'000LL;

  Graph bowtie = parse_graph("0 1\n1 2\n2 0\n0 3\n3 4\n4 0");

  // ---- 1: inclusion chain C subset U subset Gr on every test graph ----
  {
    std::vector<NamedGraph> graphs;
    graphs.push_back({"C4", cycle_graph(4)});
    graphs.push_back({"C6", cycle_graph(6)});
    graphs.push_back({"K4", complete_graph(4)});
    graphs.push_back({"K5", complete_graph(5)});
    graphs.push_back({"K6", complete_graph(6)});
    graphs.push_back({"bowtie", bowtie});
    graphs.push_back({"family(3,3)", family_graph(3, 3)});
    graphs.push_back({"family(4,3)", family_graph(4, 3)});
    graphs.push_back({"family(5,5)", family_graph(5, 5)});
    bool ok = true;
    std::string detail;
    for (const auto& [name, g] : graphs) {
      auto c = enumerate_circuits(g, caps).binomials();
      auto u = enumerate_ugb(g, caps).binomials();
      auto gr = enumerate_graver(g, caps).binomials();
      bool here = subset(c, u) && subset(u, gr);
      ok = ok && here;
      detail += name + "(" + std::to_string(c.size()) + "/" + std::to_string(u.size()) + "/" +
                std::to_string(gr.size()) + (here ? ") " : " VIOLATED) ");
    }
    report(1, "inclusion chain circuits in UGB in Graver: " + detail, ok);
  }

  // ---- 2: oracle equivalence at desk scale ----
  {
    std::vector<NamedGraph> graphs;
    graphs.push_back({"C4", cycle_graph(4)});
    graphs.push_back({"K4", complete_graph(4)});
    graphs.push_back({"K5", complete_graph(5)});
    graphs.push_back({"bowtie", bowtie});
    graphs.push_back({"family(3,3)", family_graph(3, 3)});
    bool ok = true;
    std::string detail;
    for (const auto& [name, g] : graphs) {
      try {
        BinomialSet o_grav = graver_oracle(incidence_matrix(g), kPairs);
        BinomialSet o_circ = circuits_from_graver(o_grav);
        BinomialSet o_ugb;
        for (const auto& b : o_grav)
          if (ugb_membership_lp(b, o_grav, kPivots)) o_ugb.push_back(b);
        bool here = enumerate_graver(g, caps).binomials() == o_grav &&
                    enumerate_circuits(g, caps).binomials() == o_circ &&
                    enumerate_ugb(g, caps).binomials() == o_ugb;
        ok = ok && here;
        detail += name + (here ? " " : " MISMATCH ");
      } catch (const error& e) {
        if (e.budget() && name == "family(3,3)") {
          detail += name + " over-budget(allowed) ";
        } else {
          ok = false;
          detail += name + " error:" + e.what() + " ";
        }
      }
    }
    report(2, "structural sets equal Lawrence/LP oracle sets: " + detail, ok);
  }

  // ---- 3: C = U = Gr for small complete graphs ----
  {
    bool ok = true;
    std::string detail;
    for (int n : {4, 5, 6, 7}) {
      if (n == 7 && !with_k7) {
        detail += "K7(skipped; set TORICGRAPH_K7=1) ";
        continue;
      }
      Graph g = complete_graph(n);
      auto c = enumerate_circuits(g, caps).binomials();
      auto u = enumerate_ugb(g, caps).binomials();
      auto gr = enumerate_graver(g, caps).binomials();
      bool here = c == u && u == gr;
      if (n == 5) here = here && c.size() == 30;
      ok = ok && here;
      detail += "K" + std::to_string(n) + "(" + std::to_string(gr.size()) + (here ? ") " : " VIOLATED) ");
    }
    // the K5 count is cross-checked against the oracle
    bool oracle_count = graver_oracle(incidence_matrix(complete_graph(5)), kPairs).size() == 30;
    ok = ok && oracle_count;
    report(3, "circuits = UGB = Graver on complete graphs, |K5| = 30 by oracle too: " + detail, ok);
  }

  // ---- 4: degree bounds ----
  {
    bool ok = true;
    std::string detail;
    for (int n : {4, 5, 6, 7}) {
      if (n == 7 && !with_k7) {
        detail += "K7(skipped) ";
        continue;
      }
      Exp maxdeg = enumerate_ugb(complete_graph(n), caps).max_degree();
      bool here = maxdeg == n - 2;
      ok = ok && here;
      detail += "K" + std::to_string(n) + "=" + std::to_string(maxdeg) + (here ? " " : " WRONG ");
    }
    std::vector<NamedGraph> graphs;
    graphs.push_back({"C4", cycle_graph(4)});
    graphs.push_back({"C6", cycle_graph(6)});
    graphs.push_back({"K4", complete_graph(4)});
    graphs.push_back({"K5", complete_graph(5)});
    graphs.push_back({"K6", complete_graph(6)});
    graphs.push_back({"bowtie", bowtie});
    graphs.push_back({"family(3,3)", family_graph(3, 3)});
    graphs.push_back({"family(4,3)", family_graph(4, 3)});
    graphs.push_back({"family(5,5)", family_graph(5, 5)});
    for (const auto& [name, g] : graphs) {
      Exp maxdeg = enumerate_ugb(g, caps).max_degree();
      if (maxdeg > g.n - 2) {
        ok = false;
        detail += name + " EXCEEDS m-2 ";
      }
    }
    report(4, "max UGB degree is n-2 on K_n and at most vertices-2 everywhere: " + detail, ok);
  }

  // ---- 5: the figure-2 walk of family(3,3) ----
  {
    Graph f = family_graph(3, 3);
    Binomial full = family33_full(f);
    WalkAnalysis a = analyze_walk(f, full);
    bool ok = full.degree() == 6 && a.primitive;
    int pure = 0;
    for (size_t i = 0; i < a.pure.size(); ++i)
      if (a.pure[i]) {
        ++pure;
        ok = ok && a.blocks.block_is_cycle[i] && a.blocks.blocks[i] == std::vector<int>{0, 1, 2};
      }
    ok = ok && pure == 1;
    ok = ok && !enumerate_ugb(f, caps).contains(full);
    ok = ok && enumerate_graver(f, caps).contains(full);
    ok = ok && !ugb_membership_lp(full, enumerate_graver(f, caps).binomials(), kPivots);
    bool certs_ok = true;
    auto certs = pure_block_certificate(f, a);
    certs_ok = certs.size() == 6;
    for (const auto& c : certs) certs_ok = certs_ok && is_balanced(f, c.plus, c.minus);
    ok = ok && certs_ok;
    report(5,
           "family(3,3) full walk: degree 6, primitive, pure central block, outside the UGB "
           "structurally and by LP, balanced F/G certificates",
           ok);
  }

  // ---- 6: the counterexample family ----
  {
    bool ok = true;
    std::string detail;
    Graph f3 = family_graph(3, 3);
    Graph f5 = family_graph(5, 5);
    Binomial full3 = family33_full(f3);
    std::vector<int> w5;  // full walk of family(5,5)
    for (int k = 0; k < 5; ++k) {
      for (int e = 0; e < 5; ++e) w5.push_back(5 + 5 * k + e);
      w5.push_back(k);
    }
    Binomial full5 = binomial_of_walk(f5, w5);
    ok = ok && full3.degree() == 3 * (3 + 1) / 2;  // s(l+1)/2 = 6
    ok = ok && full5.degree() == 5 * (5 + 1) / 2;  // 15
    detail += "full degrees 6,15 ";

    auto longest_circuit_degree = [&](const Graph& g) {
      Exp best = 0;
      for (const auto& t : enumerate_circuits(g, caps).elements) best = std::max(best, t.degree);
      return best;
    };
    Exp long3 = longest_circuit_degree(f3), long5 = longest_circuit_degree(f5);
    ok = ok && long3 == 3 + 3 - 1 && long5 == 5 + 5 - 1;  // l+s-1
    ok = ok && full5.degree() > long5;                    // s(l+1)/2 > l+s-1 strictly
    detail += "longest circuits 5,9; 15>9 ";

    // the longest circuit of family(5,5): two outer cycles over a length-4 arc
    Binomial c5 = binomial_of_walk(
        f5, {5, 6, 7, 8, 9, 4, 3, 2, 1, 10, 11, 12, 13, 14, 1, 2, 3, 4});
    ok = ok && c5.degree() == 9;
    LatticeIndexResult idx = circuit_index(f5, c5);
    ok = ok && idx.index == 1 && true_degree(f5, c5) == 9;
    detail += "index 1, true degree 9 ";

    // w': center plus s-2 outer cycles is mixed, in the UGB, still beats l+s-1
    std::vector<int> wp = {5, 6, 7, 8, 9, 0, 10, 11, 12, 13, 14, 1, 15, 16, 17, 18, 19, 2, 3, 4};
    Binomial wprime = binomial_of_walk(f5, wp);
    WalkAnalysis ap = analyze_walk(f5, wprime);
    ok = ok && ap.primitive && is_mixed(ap) && in_ugb_structural(f5, wprime);
    ok = ok && enumerate_ugb(f5, caps).contains(wprime);
    ok = ok && wprime.degree() > long5;
    detail += "w' degree " + std::to_string(wprime.degree()) + " in UGB";
    report(6, "counterexample family degrees and true degree: " + detail, ok);
  }

  // ---- 7: witness-order theorem check ----
  {
    bool ok = true;
    std::string detail;
    std::vector<NamedGraph> graphs;
    graphs.push_back({"K4", complete_graph(4)});
    graphs.push_back({"K5", complete_graph(5)});
    graphs.push_back({"bowtie", bowtie});
    graphs.push_back({"family(3,3)", family_graph(3, 3)});
    for (const auto& [name, g] : graphs) {
      BinomialSet gens = toric_ideal(incidence_matrix(g), kPairs);
      long long checked = 0;
      for (const auto& t : enumerate_graver(g, caps).elements) {
        if (!t.mixed) continue;
        WalkAnalysis a = analyze_walk(g, t.b);
        TermOrder wo = witness_order(a);
        if (!reduced_gb_contains(t.b, gens, wo, kPairs)) {
          ok = false;
          detail += name + " MISSING ELEMENT ";
        }
        ++checked;
      }
      detail += name + "(" + std::to_string(checked) + ") ";
    }
    report(7, "every mixed element lies in the reduced basis of its witness order: " + detail, ok);
  }

  // ---- 8: property suites ----
  {
    bool ok = true;
    std::string detail;

    // term order totality and multiplicativity on random triples
    std::mt19937 rng(12345);
    bool order_ok = true;
    for (int trial = 0; trial < 10'000 && order_ok; ++trial) {
      int m = 2 + static_cast<int>(rng() % 5);
      TermOrder o = TermOrder::lex(m);
      for (int i = 0; i < m; ++i) o.elim[i] = rng() % 4 == 0;
      for (int r = static_cast<int>(rng() % 3); r > 0; --r) {
        std::vector<long long> row(m);
        for (auto& x : row) x = static_cast<long long>(rng() % 4);
        o.weight_rows.push_back(std::move(row));
      }
      std::shuffle(o.tiebreak.begin(), o.tiebreak.end(), rng);
      auto rand_vec = [&] {
        std::vector<Exp> v(m);
        for (auto& x : v) x = static_cast<Exp>(rng() % 5);
        return v;
      };
      auto u = rand_vec(), v = rand_vec(), w = rand_vec(), t = rand_vec();
      order_ok = order_ok && compare(o, u, u) == Cmp::equal;
      order_ok = order_ok &&
                 static_cast<int>(compare(o, u, v)) == -static_cast<int>(compare(o, v, u));
      if (compare(o, u, v) != Cmp::greater && compare(o, v, w) != Cmp::greater)
        order_ok = order_ok && compare(o, u, w) != Cmp::greater;
      auto ut = u, vt = v;
      for (int i = 0; i < m; ++i) {
        ut[i] += t[i];
        vt[i] += t[i];
      }
      order_ok = order_ok && compare(o, u, v) == compare(o, ut, vt);
    }
    ok = ok && order_ok;
    detail += order_ok ? "orders(10k) " : "orders FAILED ";

    std::vector<NamedGraph> graphs;
    graphs.push_back({"C4", cycle_graph(4)});
    graphs.push_back({"K4", complete_graph(4)});
    graphs.push_back({"K5", complete_graph(5)});
    graphs.push_back({"bowtie", bowtie});
    graphs.push_back({"family(3,3)", family_graph(3, 3)});
    graphs.push_back({"family(4,3)", family_graph(4, 3)});
    graphs.push_back({"family(5,5)", family_graph(5, 5)});
    bool canon_ok = true, balance_ok = true, accounting_ok = true, annihilate_ok = true;
    for (const auto& [name, g] : graphs) {
      for (const auto& t : enumerate_graver(g, caps).elements) {
        Binomial re = canonical_sign(t.b.plus, t.b.minus);
        canon_ok = canon_ok && re == t.b;
        balance_ok = balance_ok && is_balanced(g, t.b.plus, t.b.minus);
        WalkAnalysis a = analyze_walk(g, t.b);
        long long cyc = 0;
        for (size_t k = 0; k < a.blocks.blocks.size(); ++k)
          if (a.blocks.block_is_cycle[k])
            cyc += static_cast<long long>(a.blocks.blocks[k].size());
        accounting_ok = accounting_ok &&
                        2 * t.degree == cyc + 2 * static_cast<long long>(a.blocks.cut_edges.size());
        if (t.mixed) {
          TermOrder wo = witness_order(a);
          for (const auto& row : wo.weight_rows) {
            long long dot = 0;
            for (int e = 0; e < g.m(); ++e) dot += row[e] * (t.b.plus[e] - t.b.minus[e]);
            annihilate_ok = annihilate_ok && dot == 0;
          }
        }
      }
    }
    ok = ok && canon_ok && balance_ok && accounting_ok && annihilate_ok;
    detail += std::string(canon_ok ? "canonical " : "canonical FAILED ") +
              (balance_ok ? "balance " : "balance FAILED ") +
              (accounting_ok ? "degree-accounting " : "degree-accounting FAILED ") +
              (annihilate_ok ? "W(plus-minus)=0" : "W(plus-minus)=0 FAILED");
    report(8, "property suites: " + detail, ok);
  }

  // ---- 9: optional stretch: K8 ----
  if (with_k8) {
    Graph k8 = complete_graph(8);
    auto gr = enumerate_graver(k8, caps).binomials();
    auto u = enumerate_ugb(k8, caps).binomials();
    auto c = enumerate_circuits(k8, caps).binomials();
    bool ok = u.size() == 45570 && u == gr && c != u && subset(c, u);
    report(9, "K8 stretch: |UGB| = " + std::to_string(u.size()) +
                  ", circuits strictly smaller, UGB = Graver",
           ok);
  } else {
    skip(9, "K8 stretch (set TORICGRAPH_STRETCH=1; not gating)");
  }

  if (failures == 0) std::printf("acceptance: all criteria passed\n");
  else std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
