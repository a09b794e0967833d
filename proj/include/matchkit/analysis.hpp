#pragma once

#include <optional>
#include <vector>

#include "matchkit/blossom.hpp"
#include "matchkit/connectivity.hpp"
#include "matchkit/decomposition.hpp"
#include "matchkit/graph.hpp"

namespace matchkit {

/// Lazily memoized per-graph facts shared across checkers. Analysis owns its
/// graph; checkers receive one Analysis per suite item.
class Analysis {
 public:
  explicit Analysis(Graph g) : g_(std::move(g)) {}

  const Graph& graph() const { return g_; }
  int n() const { return g_.vertex_count(); }

  int nu() {
    if (!nu_) nu_ = matching_number(g_);
    return *nu_;
  }
  int def() { return n() - 2 * nu(); }

  bool connected() {
    if (!connected_) connected_ = is_connected(g_);
    return *connected_;
  }
  bool complete() {
    if (!complete_) complete_ = is_complete(g_);
    return *complete_;
  }
  bool bipartite() {
    if (!bipartite_) bipartite_ = is_bipartite(g_);
    return *bipartite_;
  }
  bool factor_critical() {
    if (!factor_critical_) factor_critical_ = is_factor_critical(g_);
    return *factor_critical_;
  }
  const EquimatchResult& equimatchable() {
    if (!equimatchable_) equimatchable_ = is_equimatchable(g_);
    return *equimatchable_;
  }
  bool efc() { return equimatchable().equimatchable && factor_critical(); }
  bool randomly_matchable() {
    if (!randomly_matchable_) randomly_matchable_ = is_randomly_matchable(g_);
    return *randomly_matchable_;
  }
  int kappa() {
    if (!kappa_) kappa_ = vertex_connectivity(g_);
    return *kappa_;
  }
  const IndependenceCertificate& alpha_certificate() {
    if (!alpha_) alpha_ = independence_number(g_);
    return *alpha_;
  }
  int alpha() { return alpha_certificate().alpha; }

  /// All minimum cuts; empty for complete graphs.
  const std::vector<CutDecomposition>& min_cuts() {
    if (!cuts_) {
      if (complete())
        cuts_.emplace();
      else
        cuts_ = minimum_vertex_cuts(g_);
    }
    return *cuts_;
  }

  PropertyReport report() {
    PropertyReport r;
    r.nu = nu();
    r.def = def();
    r.alpha = alpha();
    r.kappa = kappa();
    r.connected = connected();
    r.bipartite = bipartite();
    r.factor_critical = factor_critical();
    r.equimatchable = equimatchable().equimatchable;
    r.randomly_matchable = randomly_matchable();
    return r;
  }

 private:
  Graph g_;
  std::optional<int> nu_, kappa_;
  std::optional<bool> connected_, complete_, bipartite_, factor_critical_, randomly_matchable_;
  std::optional<EquimatchResult> equimatchable_;
  std::optional<IndependenceCertificate> alpha_;
  std::optional<std::vector<CutDecomposition>> cuts_;
};

}  // namespace matchkit
