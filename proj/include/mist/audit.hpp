#pragma once
// Ratio audit: run the approximation over a corpus, optionally against the
// exact oracle, and keep every ratio as an exact fraction.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mist/assembler.hpp"
#include "mist/corpus.hpp"

namespace mist {

struct Fraction {
  long long num = 0;
  long long den = 1;

  static Fraction reduced(long long num, long long den);
  friend bool operator<(const Fraction& a, const Fraction& b) { return a.num * b.den < b.num * a.den; }
  friend bool operator==(const Fraction& a, const Fraction& b) = default;
};
std::string to_string(const Fraction& f);

struct AuditRecord {
  long long id = 0;
  int n = 0;
  int m = 0;
  int alg = 0;
  std::optional<int> oracle;
  int cover_edges = 0;
  int unconstrained_edges = 0;
  std::optional<Fraction> ratio;  // oracle / alg
  bool lossy_repair = false;
  ShortCircuit short_circuit = ShortCircuit::None;
  int alpha_violations = 0;
  std::string error;  // non-empty when the instance threw

  /// 3 * oracle > 4 * alg.
  bool violation() const { return oracle && 3LL * *oracle > 4LL * alg; }
  std::string status() const;
};

struct AuditOptions {
  bool oracle = false;
  int oracle_bound = 12;
  CoverMode mode = CoverMode::Exact;
  int cover_bound = 20;  // exact cover mode refuses larger graphs
};

struct AuditSummary {
  long long instances = 0;
  long long violations = 0;
  long long errors = 0;
  std::optional<Fraction> max_ratio;
};

using AuditSink = std::function<void(const AuditRecord&)>;

AuditRecord audit_instance(long long id, const Graph& g, const AuditOptions& options);

/// Streams one record per instance into sink and returns the summary.
AuditSummary ratio_audit(const CorpusSpec& corpus, const AuditOptions& options, const AuditSink& sink);
std::vector<AuditRecord> ratio_audit(std::string_view corpus, const AuditOptions& options = {});
AuditSummary summarize(const std::vector<AuditRecord>& records);

/// "key=value" tokens on one line, and the "summary ..." line.
std::string serialize_record(const AuditRecord& r);
AuditRecord parse_record(std::string_view line);
std::string serialize_summary(const AuditSummary& s);

}  // namespace mist
