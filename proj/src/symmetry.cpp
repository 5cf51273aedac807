#include "majority/symmetry.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace majority {

Rule s01(const Rule& rule) {
  Rule out;
  for (std::size_t k = 0; k < kTableSize; ++k) out.set(k, !rule[kTableSize - 1 - k]);
  return out;
}

Rule srl(const Rule& rule) {
  Rule out;
  for (unsigned k = 0; k < kTableSize; ++k) out.set(k, rule[reverse_code(k)]);
  return out;
}

std::string_view symmetry_name(Symmetry s) {
  switch (s) {
    case Symmetry::Identity: return "id";
    case Symmetry::S01: return "s01";
    case Symmetry::Srl: return "srl";
    case Symmetry::Both: return "s01*srl";
  }
  return "?";
}

Rule apply_symmetry(Symmetry s, const Rule& rule) {
  switch (s) {
    case Symmetry::Identity: return rule;
    case Symmetry::S01: return s01(rule);
    case Symmetry::Srl: return srl(rule);
    case Symmetry::Both: return s01(srl(rule));
  }
  return rule;
}

std::vector<Variant> symmetric_variants(const Rule& rule) {
  std::vector<Variant> out;
  for (auto s : {Symmetry::Identity, Symmetry::S01, Symmetry::Srl, Symmetry::Both}) {
    Rule v = apply_symmetry(s, rule);
    if (std::none_of(out.begin(), out.end(), [&](const Variant& x) { return x.rule == v; })) {
      out.push_back({s, v});
    }
  }
  return out;
}

OlympusTemplate::OlympusTemplate() {
  symbols_.fill('*');
  free_.resize(kTableSize);
  for (std::size_t k = 0; k < kTableSize; ++k) free_[k] = k;
}

OlympusTemplate::OlympusTemplate(const std::array<char, kTableSize>& symbols) : symbols_(symbols) {
  for (std::size_t k = 0; k < kTableSize; ++k) {
    const char c = symbols_[k];
    if (c != '0' && c != '1' && c != '*') {
      throw ParseError("invalid template symbol at position " + std::to_string(k), k);
    }
    if (c == '*') free_.push_back(k);
  }
}

OlympusTemplate OlympusTemplate::parse(std::string_view text) {
  std::array<char, kTableSize> symbols{};
  std::size_t k = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c != '0' && c != '1' && c != '*') {
      throw ParseError("invalid template symbol '" + std::string(1, c) + "' at offset " +
                           std::to_string(i),
                       i);
    }
    if (k == kTableSize) throw ParseError("template has more than 128 symbols", i);
    symbols[k++] = c;
  }
  if (k != kTableSize) {
    throw ParseError("template must have 128 symbols, got " + std::to_string(k), text.size());
  }
  return OlympusTemplate(symbols);
}

std::string OlympusTemplate::format() const {
  return std::string(symbols_.begin(), symbols_.end());
}

bool OlympusTemplate::contains(const Rule& rule) const {
  for (std::size_t k = 0; k < kTableSize; ++k) {
    if (symbols_[k] != '*' && (symbols_[k] == '1') != rule[k]) return false;
  }
  return true;
}

Rule embed(const Genotype& genotype, const OlympusTemplate& tmpl) {
  const auto& free = tmpl.free_positions();
  if (genotype.size() != free.size()) {
    throw std::invalid_argument("genotype has " + std::to_string(genotype.size()) +
                                " bits but the template has " + std::to_string(free.size()) +
                                " free positions");
  }
  Rule rule;
  for (std::size_t k = 0; k < kTableSize; ++k) rule.set(k, tmpl.symbol(k) == '1');
  for (std::size_t j = 0; j < free.size(); ++j) rule.set(free[j], genotype[j] != 0);
  return rule;
}

Genotype project(const Rule& rule, const OlympusTemplate& tmpl) {
  for (std::size_t k = 0; k < kTableSize; ++k) {
    if (!tmpl.is_free(k) && (tmpl.symbol(k) == '1') != rule[k]) {
      throw std::invalid_argument("rule is outside the template: position " + std::to_string(k) +
                                  " must be " + std::string(1, tmpl.symbol(k)));
    }
  }
  Genotype g;
  g.reserve(tmpl.free_positions().size());
  for (auto k : tmpl.free_positions()) g.push_back(rule[k] ? 1 : 0);
  return g;
}

Rule sample_olympus(const OlympusTemplate& tmpl, Rng& rng) {
  Genotype g(tmpl.free_positions().size());
  std::uint64_t bits = 0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (j % 64 == 0) bits = rng();
    g[j] = static_cast<std::uint8_t>((bits >> (j % 64)) & 1);
  }
  return embed(g, tmpl);
}

Rule sample_olympus(const OlympusTemplate& tmpl, std::uint64_t seed) {
  Rng rng(seed);
  return sample_olympus(tmpl, rng);
}

std::size_t joint_bits(std::span<const Rule> rules) {
  if (rules.empty()) return kTableSize;
  Rule::Table differ;
  for (const auto& r : rules) differ |= r.table() ^ rules.front().table();
  return kTableSize - differ.count();
}

OlympusTemplate template_of(std::span<const Rule> rules) {
  if (rules.empty()) return OlympusTemplate::full_space();
  std::array<char, kTableSize> symbols{};
  for (std::size_t k = 0; k < kTableSize; ++k) {
    const bool v = rules.front()[k];
    const bool agree = std::all_of(rules.begin(), rules.end(), [&](const Rule& r) { return r[k] == v; });
    symbols[k] = agree ? (v ? '1' : '0') : '*';
  }
  return OlympusTemplate(symbols);
}

OlympusDerivation derive_olympus(std::span<const Rule> rules) {
  if (rules.empty()) throw std::invalid_argument("derive_olympus needs at least one rule");
  std::vector<std::vector<Variant>> variants;
  for (const auto& r : rules) variants.push_back(symmetric_variants(r));

  OlympusDerivation best;
  std::vector<std::size_t> index(rules.size(), 0);
  std::vector<Rule> current(rules.size());
  for (;;) {
    for (std::size_t i = 0; i < rules.size(); ++i) current[i] = variants[i][index[i]].rule;
    const std::size_t joint = joint_bits(current);
    ++best.combinations;
    std::vector<Symmetry> labels;
    for (std::size_t i = 0; i < rules.size(); ++i) labels.push_back(variants[i][index[i]].symmetry);
    if (best.combinations == 1 || joint > best.joint_bits) {
      best.joint_bits = joint;
      best.optimal_sets.clear();
      best.chosen.clear();
      for (std::size_t i = 0; i < rules.size(); ++i) best.chosen.push_back(variants[i][index[i]]);
    }
    if (joint == best.joint_bits) best.optimal_sets.push_back(std::move(labels));

    // Odometer with the last rule varying fastest.
    std::size_t pos = rules.size();
    bool exhausted = false;
    for (;;) {
      if (pos == 0) {
        exhausted = true;
        break;
      }
      --pos;
      if (++index[pos] < variants[pos].size()) break;
      index[pos] = 0;
    }
    if (exhausted) break;
  }

  std::vector<Rule> chosen_rules;
  for (const auto& v : best.chosen) chosen_rules.push_back(v.rule);
  best.tmpl = template_of(chosen_rules);
  return best;
}

}  // namespace majority
