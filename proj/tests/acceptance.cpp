// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "multitwist/families.hpp"
#include "multitwist/homology.hpp"
#include "multitwist/torelli.hpp"
#include "multitwist/verify.hpp"

using namespace multitwist;
namespace fam = multitwist::families;

namespace {

// Limits, in seconds unless noted.
constexpr double kHainCallLimitMs = 1.0;
constexpr double kOracleSweepLimit = 300.0;
constexpr double kLemmaSweepLimit = 600.0;
constexpr int kExponentBound = 2;
constexpr std::size_t kRandomSamples = 100;
constexpr std::size_t kMinOraclePairsGenus3 = 10000;
constexpr int kMaxGenus = 4;
constexpr int kGeneralMaxEdges = 6;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
  std::printf("[%s] %2d %s: %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

struct Sweeps {
  std::map<int, VerificationReport> system;   // by genus
  std::map<int, VerificationReport> general;  // by genus
};

VerificationReport sweep(int genus, Mode mode) {
  EnumSpec spec;
  spec.genus = genus;
  spec.mode = mode;
  if (mode == Mode::General) spec.max_edges = kGeneralMaxEdges;
  VerifyOptions options;
  options.exponent_bound = kExponentBound;
  options.random_samples = kRandomSamples;
  return verify_theorems(spec, options);
}

/// Totals of one check over the given reports.
struct Tally {
  std::size_t passed = 0, failed = 0;
  std::string first_counterexample;
};

Tally tally(const std::vector<const VerificationReport*>& reports, const std::string& name) {
  Tally t;
  for (const auto* r : reports) {
    if (const auto* c = r->find(name)) {
      t.passed += c->passed;
      t.failed += c->failed;
      if (t.first_counterexample.empty() && !c->counterexamples.empty()) {
        t.first_counterexample = c->counterexamples.front();
      }
    }
  }
  return t;
}

std::string describe(const Tally& t) {
  std::string s = std::to_string(t.passed) + " passed, " + std::to_string(t.failed) + " failed";
  if (!t.first_counterexample.empty()) s += "; first counterexample:\n" + t.first_counterexample;
  return s;
}

std::vector<const VerificationReport*> systems_up_to(const Sweeps& s, int genus) {
  std::vector<const VerificationReport*> out;
  for (const auto& [g, r] : s.system) {
    if (g <= genus) out.push_back(&r);
  }
  return out;
}

bool complete(const std::vector<const VerificationReport*>& reports) {
  for (const auto* r : reports) {
    if (!r->complete) return false;
  }
  return true;
}

/// A check over the sweeps: zero failures and at least one instance.
void zero_failures(int id, const std::string& title, const Sweeps& s,
                   const std::vector<std::string>& checks, bool with_general) {
  auto reports = systems_up_to(s, kMaxGenus);
  if (with_general) {
    for (const auto& [g, r] : s.general) reports.push_back(&r);
  }
  bool ok = complete(reports);
  std::string detail;
  for (const auto& name : checks) {
    const auto t = tally(reports, name);
    ok = ok && t.failed == 0 && t.passed > 0;
    if (!detail.empty()) detail += "; ";
    detail += name + " " + describe(t);
  }
  report(id, title, ok, detail);
}

void criterion_hain() {
  bool ok = true;
  std::size_t calls = 0;
  double worst_ms = 0, total_ms = 0;
  for (int g1 = 1; g1 <= 3; ++g1) {
    for (int g2 = 1; g2 <= 3; ++g2) {
      const auto g = fam::theta(g1, g2);
      for (int a = -3; a <= 3; ++a) {
        for (int b = -3; b <= 3; ++b) {
          for (int c = -3; c <= 3; ++c) {
            const MultiTwist t{{a, b, c}};
            const auto start = Clock::now();
            const bool member = torelli_membership(g, t).member;
            const double ms = since(start) * 1e3;
            ++calls;
            total_ms += ms;
            worst_ms = std::max(worst_ms, ms);
            const bool identity = a == 0 && b == 0 && c == 0;
            ok = ok && member == identity && difference_map_trivial(g, t) == identity;
          }
        }
      }
    }
  }
  const double mean_ms = total_ms / static_cast<double>(calls);
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "%zu multi-twists on THETA(g1,g2), g1,g2 in 1..3; mean %.4f ms, max %.4f ms per call",
                calls, mean_ms, worst_ms);
  report(1, "Theta graph: member iff every exponent vanishes", ok && mean_ms < kHainCallLimitMs, detail);
}

void criterion_oracle(const Sweeps& s) {
  std::vector<const VerificationReport*> reports{&s.system.at(2), &s.system.at(3)};
  const auto t = tally(reports, "oracle-equivalence");
  const double seconds = s.system.at(2).seconds + s.system.at(3).seconds;
  const auto pairs3 = tally({&s.system.at(3)}, "oracle-equivalence").passed;
  const bool ok = complete(reports) && t.failed == 0 && pairs3 >= kMinOraclePairsGenus3 &&
                  seconds < kOracleSweepLimit;
  char detail[200];
  std::snprintf(detail, sizeof detail, "genus 2-3, %zu graphs, %s; genus-3 pairs %zu; %.2f s",
                s.system.at(2).graphs + s.system.at(3).graphs, describe(t).c_str(), pairs3,
                seconds);
  report(2, "Oracle equivalence", ok, detail);
}

void criterion_rank(const Sweeps& s) {
  const auto reports = systems_up_to(s, kMaxGenus);
  const auto t = tally(reports, "rank-formula");
  std::size_t graphs = 0;
  for (const auto* r : reports) graphs += r->graphs;
  report(3, "Rank = E - n with a saturated member basis",
         complete(reports) && t.failed == 0 && t.passed == graphs,
         "genus 2-4, " + std::to_string(graphs) + " systems, " + describe(t));
}

void criterion_families() {
  bool ok = true;
  std::string detail;
  for (int g = 3; g <= 8; ++g) {
    const int tree = multitwist_subgroup_rank(fam::separating_tree(g)).rank;
    const int cycle = multitwist_subgroup_rank(fam::pants_cycle_with_handles(g)).rank;
    ok = ok && tree == 2 * g - 3 && cycle == 2 * g - 3;
    detail += (detail.empty() ? "" : ", ") + std::string("g=") + std::to_string(g) + ":" +
              std::to_string(tree) + "/" + std::to_string(cycle);
  }
  report(4, "Separating tree and pants cycle reach 2g - 3", ok,
         "rank tree/cycle " + detail);
}

void criterion_lemmas(const Sweeps& s, double seconds) {
  const auto reports = systems_up_to(s, kMaxGenus);
  const auto planar = tally(reports, "planar-necklace-bound");
  const auto embedded = tally(reports, "embedded-necklace-bound");
  char time[64];
  std::snprintf(time, sizeof time, "; sweep %.2f s", seconds);
  report(5, "Necklace lower bounds g and g + 1",
         complete(reports) && planar.failed == 0 && embedded.failed == 0 && planar.passed > 0 &&
             embedded.passed > 0 && seconds < kLemmaSweepLimit,
         "all-planar " + describe(planar) + "; embedded " + describe(embedded) + time);
}

void criterion_structural(const Sweeps& s) {
  std::vector<const VerificationReport*> all = systems_up_to(s, kMaxGenus);
  std::vector<const VerificationReport*> general;
  for (const auto& [g, r] : s.general) {
    all.push_back(&r);
    general.push_back(&r);
  }
  bool ok = complete(all);
  std::string detail;
  for (const char* name : {"equivalence-transitivity", "orientation-invariance",
                           "isomorphism-invariance", "normalize-membership"}) {
    const auto t = tally(all, name);
    ok = ok && t.failed == 0 && t.passed > 0;
    detail += std::string(detail.empty() ? "" : "; ") + name + " " + describe(t);
  }
  const auto g = tally(general, "normalize-membership");
  ok = ok && g.passed > 0;
  std::size_t general_graphs = 0;
  for (const auto* r : general) general_graphs += r->graphs;
  detail += "; general mode: " + std::to_string(general_graphs) + " graphs up to " +
            std::to_string(kGeneralMaxEdges) + " circles";
  report(10, "Structural suites", ok, detail);
}

}  // namespace

int main() {
  criterion_hain();

  Sweeps s;
  const auto start = Clock::now();
  for (int g = 2; g <= kMaxGenus; ++g) s.system.emplace(g, sweep(g, Mode::System));
  const double system_seconds = since(start);
  for (int g = 2; g <= kMaxGenus; ++g) s.general.emplace(g, sweep(g, Mode::General));

  criterion_oracle(s);
  criterion_rank(s);
  criterion_families();
  criterion_lemmas(s, system_seconds);
  zero_failures(6, "Rank bounds 2g - 3 and 2g - 3 - D(s)", s,
                {"generic-rank-bound", "defect-rank-bound"}, false);
  zero_failures(7, "Equivalent circle sets and necklaces are BP-necklaces", s,
                {"bp-subsets", "bp-necklaces"}, true);
  zero_failures(8, "Menger duality at k = 2", s, {"menger"}, true);
  zero_failures(9, "Transversal circles: crossing contract and pairing = n_D", s,
                {"transversal-circles", "necklace-reduction"}, false);
  criterion_structural(s);

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
