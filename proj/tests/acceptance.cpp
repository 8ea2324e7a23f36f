// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "behave/circuit.hpp"
#include "behave/laws.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace behave;

namespace {

struct Verdict {
  bool ok;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  double budget_s;
  std::function<Verdict()> run;
};

System<LinMap> circuit_system(const std::string& file) { return compile_circuit(support::circuit(file)).system(); }

LinMap by_name(const VectObj& dom, const VectObj& cod, const std::vector<std::pair<std::string, std::string>>& entries) {
  Matrix m(cod.dim(), dom.dim());
  for (const auto& [from, to] : entries) m(cod.index_of(to), dom.index_of(from)) += 1;
  return LinMap(dom, cod, std::move(m));
}

std::string tally(const LawTally& t) { return std::to_string(t.passed) + "/" + std::to_string(t.total); }

Verdict circuit_dimensions() {
  std::string detail;
  bool ok = true;
  for (const auto& [file, u_expected] : std::vector<std::pair<std::string, std::size_t>>{{"S.ckt", 6}, {"P.ckt", 11}}) {
    const auto cc = compile_circuit(support::circuit(file));
    const std::size_t u = cc.universum().dim();
    const std::size_t b = cc.system().behavior().dim();
    const std::size_t b_oracle = oracle::nullity(support::to_ints(cc.rep.f1().matrix() - cc.rep.f2().matrix()), u);
    ok = ok && u == u_expected && b == 4 && b == b_oracle;
    detail += file + " U=" + std::to_string(u) + " B=" + std::to_string(b) + " (oracle " + std::to_string(b_oracle) +
              ")";
    if (file == "S.ckt") detail += ", ";
  }
  return {ok, detail};
}

Verdict series_law() {
  const auto g = glue(support::circuit("R1.ckt"), support::circuit("R2.ckt"), support::glue_spec("series.glue"));
  const auto& u = g.system.universum();
  Matrix law(1, u.dim());
  law(0, u.index_of("v_a")) = 1;
  law(0, u.index_of("v_d")) = -1;
  law(0, u.index_of("i_Ra=i_Rb")) = -3;
  const Matrix rows = g.rep.f1().matrix() - g.rep.f2().matrix();
  const bool in_row_space =
      oracle::rank(support::scaled_ints(vstack(rows, law))) == oracle::rank(support::scaled_ints(rows));
  return {in_row_space && g.syntax_equals_semantics, "v_a - v_d - 3 i in row space: " + std::string(in_row_space ? "yes" : "no")};
}

Verdict preservation() {
  // trial k is a Vect cospan when k % 5 == 4: 200 FinSet and 50 Vect
  const auto t = preservation_law(2024, 250);
  return {t.ok() && t.total == 250, tally(t) + " (200 FinSet, 50 Vect)"};
}

Verdict emergence() {
  const auto a = support::circuit("S_aug.ckt");
  const auto b = support::circuit("P_aug.ckt");
  const auto spec = support::glue_spec("SP_aug.glue");
  const std::vector<std::string> vars{"v_a", "v_b", "v_i", "v_j"};
  const auto closed = emergence_report(a, b, spec, vars, true);
  const auto open = emergence_report(a, b, spec, vars, false);
  const bool ok = closed.parts_dim() == 4 && closed.whole_dim() == 1 && closed.emergent() && open.parts_dim() == 4 &&
                  open.whole_dim() == 3 && open.emergent() && closed.whole_within_parts() && open.whole_within_parts();
  return {ok, "parts=" + std::to_string(closed.parts_dim()) + " closed whole=" + std::to_string(closed.whole_dim()) +
                  " open whole=" + std::to_string(open.whole_dim())};
}

Verdict duality() {
  const auto t = duality_law(7, 500, 4, 6);
  const std::size_t exhaustive = t.total - 500;
  std::size_t expected = 0;
  for (std::size_t s = 0; s <= 4; ++s)
    for (std::size_t n = 0; n <= 4; ++n) expected += oracle::map_count(s, n);
  return {t.ok() && exhaustive == expected,
          tally(t) + " (" + std::to_string(exhaustive) + " exhaustive, 500 random)"};
}

Verdict pushout() {
  const auto t = pushout_law(11, 40, 3);
  return {t.ok(), tally(t) + " spans, universal property and transport"};
}

Verdict adjunction() {
  const auto t = adjunction_law(5, 60, kAdjunctionBound);
  return {t.ok() && t.total >= 50, tally(t) + " instances, objects <= 3"};
}

Verdict lattice() {
  const auto t = lattice_law(3, 100, 6);
  return {t.ok() && t.total == 300, tally(t) + " (100 Vect meet, 100 FinSet meet, 100 modular)"};
}

Verdict taxonomy() {
  const auto sc = circuit_system("S_c.ckt");
  const auto s = circuit_system("S.ckt");
  const auto p = circuit_system("P.ckt");
  const auto ps = circuit_system("P_s.ckt");
  const auto controlled = make_morphism(
      sc, s,
      by_name(sc.universum(), s.universum(),
              {{"v_a'", "v_a"}, {"v_b'", "v_b"}, {"v_c'", "v_c"}, {"v_c'", "v_d"}, {"i_R1'", "i_R1"}, {"i_W1'", "i_W1"}}));
  const auto subsystem =
      make_morphism(p, ps, by_name(p.universum(), ps.universum(), {{"v_g", "v_g'"}, {"v_h", "v_h'"}, {"i_R2", "i_R2'"}}));
  const auto terminal = to_terminal(s);
  const bool ok = controlled.kind().controlled && !controlled.kind().subsystem && subsystem.kind().subsystem &&
                  !subsystem.kind().controlled && terminal.kind().subsystem;
  return {ok, "S_c->S " + to_string(controlled.kind()) + "; P->P_s " + to_string(subsystem.kind()) + "; s=>1 " +
                  to_string(terminal.kind())};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "circuit dimensions", 1, circuit_dimensions},
      {"AC2", "series resistor law", 1, series_law},
      {"AC3", "syntax/semantics preservation", 30, preservation},
      {"AC4", "emergence", 1, emergence},
      {"AC5", "Bool duality", 30, duality},
      {"AC6", "pushout transport", 30, pushout},
      {"AC7", "adjunction", 60, adjunction},
      {"AC8", "lattice properties", 10, lattice},
      {"AC9", "morphism taxonomy", 1, taxonomy},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v{false, ""};
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = v.ok && secs < c.budget_s;
    if (!ok) ++failed;
    std::printf("%s %s: %s [%s] %.3fs\n", ok ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(), v.detail.c_str(), secs);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
