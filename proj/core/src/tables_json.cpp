#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "ccoa/tables.hpp"

namespace ccoa {
namespace {

using nlohmann::json;

template <typename Atom>
json rel_json(RelationSet<Atom> r) {
  json arr = json::array();
  for (Atom a : r) arr.push_back(std::string(name(a)));
  return arr;
}

template <typename Atom>
RelationSet<Atom> rel_from(const json& arr) {
  RelationSet<Atom> r;
  for (const auto& v : arr) {
    auto a = parse_atom<Atom>(v.get<std::string>());
    if (!a) throw std::runtime_error("unknown atom in table json: " + v.get<std::string>());
    r.insert(*a);
  }
  return r;
}

template <typename Atom>
Atom atom_from(const json& v) {
  auto a = parse_atom<Atom>(v.get<std::string>());
  if (!a) throw std::runtime_error("unknown atom in table json: " + v.get<std::string>());
  return *a;
}

template <typename Atom>
json names_json() {
  json arr = json::array();
  for (Atom a : all_atoms<Atom>()) arr.push_back(std::string(name(a)));
  return arr;
}

template <typename Rows, typename Cols>
json case_json(const AlgebraTables& t, const Rows& rows, const Cols& cols) {
  json out = json::array();
  for (RoaAtom r : rows) {
    json line = json::array();
    for (RoaAtom c : cols) line.push_back(rel_json(t.roa_comp[index(r)][index(c)]));
    out.push_back(line);
  }
  return out;
}

constexpr std::array<CdaAtom, 8> kDirectional{CdaAtom::No, CdaAtom::NE, CdaAtom::Ea, CdaAtom::SE,
                                              CdaAtom::So, CdaAtom::SW, CdaAtom::We, CdaAtom::NW};

}  // namespace

std::string tables_to_json(const AlgebraTables& t) {
  json j;
  j["cda_atoms"] = names_json<CdaAtom>();
  j["roa_atoms"] = names_json<RoaAtom>();
  json comp = json::array(), otimes = json::array();
  for (std::size_t r = 0; r < kAtomCount; ++r) {
    json crow = json::array(), orow = json::array();
    for (std::size_t s = 0; s < kAtomCount; ++s) {
      crow.push_back(rel_json(t.cda_comp[r][s]));
      orow.push_back(rel_json(t.cda_otimes[r][s]));
    }
    comp.push_back(crow);
    otimes.push_back(orow);
  }
  j["cda_comp"] = comp;
  j["cda_otimes"] = otimes;
  json cconv = json::array(), rconv = json::array(), rrot = json::array();
  for (std::size_t i = 0; i < kAtomCount; ++i) {
    cconv.push_back(std::string(name(t.cda_conv[i])));
    rconv.push_back(std::string(name(t.roa_conv[i])));
    rrot.push_back(std::string(name(t.roa_rot[i])));
  }
  j["cda_conv"] = cconv;
  j["roa_conv"] = rconv;
  j["roa_rot"] = rrot;
  j["roa_comp_case1"] = case_json(t, kCase1Rows, kCase1Cols);
  j["roa_comp_case2"] = case_json(t, kCase2Rows, kCase2Cols);
  json lir = json::array(), rir = json::array();
  for (CdaAtom a : kDirectional) {
    lir.push_back(rel_json(t.lir[index(a)]));
    rir.push_back(rel_json(t.rir[index(a)]));
  }
  j["lir"] = lir;
  j["rir"] = rir;
  return j.dump(2) + "\n";
}

AlgebraTables tables_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    AlgebraTables t;
    for (std::size_t r = 0; r < kAtomCount; ++r) {
      t.cda_conv[r] = atom_from<CdaAtom>(j.at("cda_conv").at(r));
      t.roa_conv[r] = atom_from<RoaAtom>(j.at("roa_conv").at(r));
      t.roa_rot[r] = atom_from<RoaAtom>(j.at("roa_rot").at(r));
      for (std::size_t s = 0; s < kAtomCount; ++s) {
        t.cda_comp[r][s] = rel_from<CdaAtom>(j.at("cda_comp").at(r).at(s));
        t.cda_otimes[r][s] = rel_from<RoaAtom>(j.at("cda_otimes").at(r).at(s));
      }
    }
    auto load_case = [&](const json& cells, const auto& rows, const auto& cols) {
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
          t.roa_comp[index(rows[r])][index(cols[c])] = rel_from<RoaAtom>(cells.at(r).at(c));
    };
    load_case(j.at("roa_comp_case1"), kCase1Rows, kCase1Cols);
    load_case(j.at("roa_comp_case2"), kCase2Rows, kCase2Cols);
    for (std::size_t d = 0; d < kDirectional.size(); ++d) {
      t.lir[index(kDirectional[d])] = rel_from<CdaAtom>(j.at("lir").at(d));
      t.rir[index(kDirectional[d])] = rel_from<CdaAtom>(j.at("rir").at(d));
    }
    return t;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed table json: ") + e.what());
  }
}

CdaRelation decode_printed_cda(std::string_view printed) {
  if (printed == "?") return CdaRelation::universal();
  if (auto a = parse_atom<CdaAtom>(printed)) return CdaRelation::single(*a);
  if (auto r = parse_relation<CdaAtom>(printed); r && printed.front() == '{') return *r;
  if (printed.size() < 5 || printed.front() != '[' || printed.back() != ']')
    throw std::invalid_argument("unrecognised composition cell: " + std::string(printed));
  const auto inner = printed.substr(1, printed.size() - 2);
  const auto comma = inner.find(',');
  if (comma == std::string_view::npos) throw std::invalid_argument("bad interval: " + std::string(printed));
  auto from = parse_atom<CdaAtom>(inner.substr(0, comma));
  auto to = parse_atom<CdaAtom>(inner.substr(comma + 1));
  if (!from || !to || *from == CdaAtom::Eq || *to == CdaAtom::Eq)
    throw std::invalid_argument("bad interval endpoints: " + std::string(printed));
  // Directional atoms are indices 0..7 clockwise from north.
  const auto a = static_cast<int>(index(*from));
  const auto b = static_cast<int>(index(*to));
  const int cw = (b - a + 8) % 8;
  CdaRelation out{*from, *to};
  if (cw == 4) {
    // Opposite endpoints: the straight line through the reference point.
    out.insert(CdaAtom::Eq);
  } else {
    const int step = cw < 4 ? 1 : -1;
    for (int i = a; i != b; i = (i + step + 8) % 8) out.insert(atom_at<CdaAtom>(static_cast<std::size_t>(i)));
  }
  return out;
}

std::vector<Discrepancy> DiscrepancyReport::unexpected() const {
  std::vector<Discrepancy> out;
  std::copy_if(discrepancies.begin(), discrepancies.end(), std::back_inserter(out),
               [](const Discrepancy& d) { return !d.whitelisted; });
  return out;
}

DiscrepancyReport verify_against_reference(const AlgebraTables& derived, std::string_view reference_json) {
  json ref;
  try {
    ref = json::parse(reference_json);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed reference tables: ") + e.what());
  }

  std::set<std::string> whitelist;
  for (const auto& k : ref.value("known_discrepancies", json::array())) whitelist.insert(k.get<std::string>());

  DiscrepancyReport rep;
  std::set<std::string> seen_keys;
  auto record = [&](std::string key, std::string printed, std::string expected, std::string got) {
    ++rep.cells_compared;
    if (expected == got) return;
    const bool wl = whitelist.count(key) > 0;
    seen_keys.insert(key);
    rep.discrepancies.push_back({std::move(key), std::move(printed), std::move(expected), std::move(got), wl});
  };
  auto strict_atom = [](auto tag, const std::string& s) {
    using Atom = decltype(tag);
    auto a = parse_atom<Atom>(s);
    if (!a) throw std::runtime_error("unknown atom in reference tables: " + s);
    return *a;
  };
  auto strict_rel = [](auto tag, const std::string& s) {
    using Atom = decltype(tag);
    auto r = parse_relation<Atom>(s);
    if (!r) throw std::runtime_error("bad relation in reference tables: " + s);
    return *r;
  };

  const auto& cols = ref.at("cda_columns");
  for (const auto& [row_name, cells] : ref.at("cda_comp").items()) {
    const CdaAtom r = strict_atom(CdaAtom{}, row_name);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const CdaAtom s = strict_atom(CdaAtom{}, cols.at(c).get<std::string>());
      const std::string printed = cells.at(c).get<std::string>();
      record("cda_comp:" + row_name + "," + std::string(name(s)), printed, to_string(decode_printed_cda(printed)),
             to_string(derived.cda_comp[index(r)][index(s)]));
    }
  }
  for (const auto& [row_name, cells] : ref.at("cda_otimes").items()) {
    const CdaAtom r = strict_atom(CdaAtom{}, row_name);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const CdaAtom s = strict_atom(CdaAtom{}, cols.at(c).get<std::string>());
      const std::string printed = cells.at(c).get<std::string>();
      record("cda_otimes:" + row_name + "," + std::string(name(s)), printed,
             to_string(strict_rel(RoaAtom{}, printed)), to_string(derived.cda_otimes[index(r)][index(s)]));
    }
  }
  for (const char* table : {"roa_conv", "roa_rot"}) {
    const bool conv = std::string_view(table) == "roa_conv";
    for (const auto& [atom_name, value] : ref.at(table).items()) {
      const RoaAtom a = strict_atom(RoaAtom{}, atom_name);
      const std::string printed = value.get<std::string>();
      const RoaAtom got = conv ? derived.roa_conv[index(a)] : derived.roa_rot[index(a)];
      record(std::string(table) + ":" + atom_name, printed, printed, std::string(name(got)));
    }
  }
  for (const char* table : {"roa_comp_case1", "roa_comp_case2"}) {
    const auto& block = ref.at(table);
    const auto& ccols = block.at("columns");
    for (const auto& [row_name, cells] : block.at("rows").items()) {
      const RoaAtom r = strict_atom(RoaAtom{}, row_name);
      for (std::size_t c = 0; c < ccols.size(); ++c) {
        const RoaAtom s = strict_atom(RoaAtom{}, ccols.at(c).get<std::string>());
        const std::string printed = cells.at(c).get<std::string>();
        record(std::string(table) + ":" + row_name + "," + std::string(name(s)), printed,
               to_string(strict_rel(RoaAtom{}, printed)), to_string(derived.roa_comp[index(r)][index(s)]));
      }
    }
  }
  for (const char* table : {"lir", "rir"}) {
    const bool left = std::string_view(table) == "lir";
    for (const auto& [atom_name, value] : ref.at(table).items()) {
      const CdaAtom a = strict_atom(CdaAtom{}, atom_name);
      const std::string printed = value.get<std::string>();
      record(std::string(table) + ":" + atom_name, printed, to_string(strict_rel(CdaAtom{}, printed)),
             to_string(left ? derived.lir[index(a)] : derived.rir[index(a)]));
    }
  }

  for (const auto& k : whitelist)
    if (!seen_keys.count(k)) rep.stale_whitelist.push_back(k);
  return rep;
}

}  // namespace ccoa
