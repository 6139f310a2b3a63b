// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>

#include "hn/family.hpp"
#include "hn/hntype.hpp"
#include "hn/lattice.hpp"
#include "hn/oracle.hpp"
#include "hn/splitting.hpp"
#include "support/generators.hpp"

using namespace hn;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds,
               const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome result;
  try {
    result = body();
  } catch (const std::exception& e) {
    result = {false, std::string("exception: ") + e.what()};
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = limit_seconds <= 0 || elapsed < limit_seconds;
  const bool pass = result.ok && in_time;
  if (!pass) ++failures;
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(3);
  line << (pass ? "PASS" : "FAIL") << "  [" << id << "] " << title << "  (" << elapsed << " s";
  if (limit_seconds > 0) line << " / limit " << limit_seconds << " s";
  line << ")";
  if (!result.detail.empty()) line << "  " << result.detail;
  if (!in_time) line << "  time limit exceeded";
  std::cout << line.str() << std::endl;
}

std::vector<SheafFamily> families() {
  hn::testing::Rng rng(20240601);
  std::vector<SheafFamily> out;
  for (int i = 0; i < 100; ++i) out.push_back(hn::testing::random_family(rng, 5, 15));
  return out;
}

}  // namespace

int main() {
  criterion(1, "quotient_shift of 1000 random types of length 2-6 is an HN type", 5.0, [] {
    hn::testing::Rng rng(1);
    int bad = 0;
    for (int i = 0; i < 1000; ++i) {
      const HnType t = hn::testing::random_type(rng, 2, 6);
      const HnType s = quotient_shift(t);
      if (diagnose_hn_type(s.polys()) || s.length() + 1 != t.length()) ++bad;
    }
    return Outcome{bad == 0, std::to_string(bad) + "/1000 invalid"};
  });

  criterion(2, "hn_filtration matches the closed form on 500 splitting types", 30.0, [] {
    hn::testing::Rng rng(2);
    int bad = 0;
    for (int i = 0; i < 500; ++i) {
      const SplittingType s = hn::testing::random_splitting(rng, 8, -5, 5);
      const HnFiltration computed = hn_filtration(lattice_from_splitting(s));
      const HnFiltration closed = hn_closed_form(s);
      if (computed.graded != closed.graded || !(computed.type() == closed.type())) ++bad;
    }
    return Outcome{bad == 0, std::to_string(bad) + "/500 mismatches"};
  });

  criterion(3, "exactly one HN chain, equal to hn_filtration, on 200 random lattices", 60.0, [] {
    hn::testing::Rng rng(3);
    int bad = 0;
    std::size_t largest = 0;
    for (int i = 0; i < 200; ++i) {
      const SubobjectLattice L = hn::testing::random_lattice(rng, 64);
      largest = std::max(largest, L.size());
      if (L.size() > 64 || validate_lattice(L)) {
        ++bad;
        continue;
      }
      const auto chains = enumerate_hn_chains(L);
      const HnFiltration f = hn_filtration(L);
      bool same = chains.size() == 1 && chains.front().size() == f.steps.size();
      for (std::size_t k = 0; same && k < f.steps.size(); ++k) {
        same = L.name(chains.front()[k]) == f.steps[k];
      }
      if (!same) ++bad;
    }
    return Outcome{bad == 0, std::to_string(bad) + "/200 failures, largest lattice " +
                                 std::to_string(largest) + " nodes"};
  });

  criterion(4, "hnt_leq is a partial order on 300 equal-endpoint triples", 0, [] {
    hn::testing::Rng rng(4);
    int bad = 0, related = 0;
    for (int i = 0; i < 300; ++i) {
      const auto rank = static_cast<std::size_t>(2 + rng() % 4);
      const std::int64_t degree = static_cast<std::int64_t>(rng() % 9) - 4;
      auto draw = [&] {
        return hn_closed_form(hn::testing::random_splitting_with(rng, rank, degree)).type();
      };
      const HnType a = draw(), b = draw(), c = draw();
      if (!hnt_leq(a, a) || !hnt_leq(b, b)) ++bad;
      if (hnt_leq(a, b) && hnt_leq(b, a) && !(a == b)) ++bad;
      if (hnt_leq(a, b) && hnt_leq(b, c) && !hnt_leq(a, c)) ++bad;
      related += (hnt_leq(a, b) && hnt_leq(b, c)) ? 1 : 0;
    }
    return Outcome{bad == 0, std::to_string(bad) + " counterexamples, " +
                                 std::to_string(related) + " transitive chains exercised"};
  });

  criterion(5, "jump family is semicontinuous and the reversed family is not", 0, [] {
    const bool jump_ok = !check_semicontinuity(hn::testing::jump_family()).has_value();
    const auto v = check_semicontinuity(
        hn::testing::two_point_family(SplittingType({1, -1}), SplittingType({0, 0})));
    const bool witness_ok = v && v->generic == 0 && v->special == 1;
    return Outcome{jump_ok && witness_ok, witness_ok ? "witness (generic, special)" : "bad witness"};
  });

  const std::vector<SheafFamily> fams = families();

  criterion(6, "recursive_stratify equals the level set on 100 random families", 0, [&] {
    int bad = 0, checked = 0;
    for (const auto& f : fams) {
      for (const HnType& tau : attained_types(f)) {
        ++checked;
        try {
          if (recursive_stratify(f, tau) != level_set(f, tau)) ++bad;
        } catch (const FamilyError&) {
          ++bad;
        }
      }
    }
    return Outcome{bad == 0, std::to_string(bad) + "/" + std::to_string(checked) + " mismatches"};
  });

  criterion(7, "stratification commutes with restriction to 3 subspaces per family", 0, [&] {
    hn::testing::Rng rng(7);
    int bad = 0;
    for (const auto& f : fams) {
      for (int k = 0; k < 3; ++k) {
        if (!base_change_check(f, hn::testing::random_subset(rng, f.size()))) ++bad;
      }
    }
    return Outcome{bad == 0, std::to_string(bad) + "/300 failures"};
  });

  criterion(8, "exact arithmetic: no floating point in the library, vertices interpolate exactly",
            0, [] {
              const fs::path root(HN_SOURCE_DIR);
              const std::regex floating(R"(\b(float|double|long double)\b)");
              std::vector<std::string> offenders;
              for (const char* dir : {"src", "include"}) {
                for (const auto& entry : fs::recursive_directory_iterator(root / dir)) {
                  if (!entry.is_regular_file()) continue;
                  std::ifstream in(entry.path());
                  std::string line;
                  while (std::getline(in, line)) {
                    if (std::regex_search(line, floating)) {
                      offenders.push_back(entry.path().filename().string());
                      break;
                    }
                  }
                }
              }
              hn::testing::Rng rng(8);
              int bad = 0;
              for (int i = 0; i < 500; ++i) {
                const HnPolygon p = polygon_of(hn::testing::random_type(rng, 1, 6));
                for (const auto& v : p.vertices()) {
                  if (!(interpolate_at(p, v.a) == v.f)) ++bad;
                }
              }
              std::string detail = std::to_string(offenders.size()) + " files with floating types";
              for (const auto& o : offenders) detail += " " + o;
              detail += ", " + std::to_string(bad) + " inexact vertices";
              return Outcome{offenders.empty() && bad == 0, detail};
            });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
