#include "ccoa/report.hpp"

#include "json.hpp"

namespace ccoa {
namespace {

using nlohmann::ordered_json;

template <typename Atom>
ordered_json atoms(RelationSet<Atom> r) {
  ordered_json a = ordered_json::array();
  for (Atom x : r) a.push_back(std::string(name(x)));
  return a;
}

ordered_json cell_names(const CcoaCsp& csp, const WorkItem& w) {
  ordered_json a = ordered_json::array();
  for (std::size_t i = 0; i < (w.is_triple ? 3u : 2u); ++i) a.push_back(csp.names()[w.idx[i]]);
  return a;
}

}  // namespace

std::string check_report_json(const CcoaCsp& csp, const PropagationOutcome& outcome,
                              const std::vector<std::string>& conflicts) {
  const std::size_t n = csp.size();
  ordered_json j;
  j["status"] = outcome.consistent() && conflicts.empty() ? "fixpoint" : "inconsistent";
  if (outcome.culprit) {
    const Culprit& c = *outcome.culprit;
    ordered_json cj;
    cj["channel"] = std::string(channel_name(c.channel));
    cj["cell"] = cell_names(csp, c.cell);
    if (c.cell.is_triple) {
      cj["existing"] = atoms(RoaRelation::from_mask(c.existing));
      cj["inferred"] = atoms(RoaRelation::from_mask(c.inferred));
    } else {
      cj["existing"] = atoms(CdaRelation::from_mask(c.existing));
      cj["inferred"] = atoms(CdaRelation::from_mask(c.inferred));
    }
    j["culprit"] = cj;
  } else {
    j["culprit"] = nullptr;
  }
  j["conflicts"] = conflicts;
  j["variables"] = csp.names();

  ordered_json b = ordered_json::array();
  for (std::size_t r = 0; r < n; ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < n; ++c) row.push_back(atoms(csp.binary().at(r, c)));
    b.push_back(row);
  }
  j["cda"] = b;

  ordered_json t = ordered_json::array();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = a + 1; c < n; ++c)
      for (std::size_t d = c + 1; d < n; ++d) {
        ordered_json e;
        e["cell"] = {csp.names()[a], csp.names()[c], csp.names()[d]};
        e["relation"] = atoms(csp.ternary().at(a, c, d));
        t.push_back(e);
      }
  j["roa"] = t;

  const PropagationStats& s = outcome.stats;
  ordered_json sj;
  sj["dequeues"] = s.dequeues;
  sj["pair_dequeues"] = s.pair_dequeues;
  sj["triple_dequeues"] = s.triple_dequeues;
  sj["refinements"] = s.refinements;
  ordered_json by;
  for (std::size_t c = 0; c < s.by_channel.size(); ++c) by[std::string(channel_name(static_cast<Channel>(c)))] = s.by_channel[c];
  sj["refinements_by_channel"] = by;
  j["stats"] = sj;
  return j.dump(2) + "\n";
}

}  // namespace ccoa
