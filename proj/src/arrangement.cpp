// Copyright 2026 The Hypervert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hypervert/arrangement.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "hypervert/linalg.hpp"

namespace hypervert {
namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

int parse_count(const Token& tok, std::size_t line_no, const char* what) {
  int value = 0;
  const auto* first = tok.text.data();
  const auto* last = first + tok.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value < 1) {
    throw ParseError(line_no, tok.column,
                     std::string(what) + " must be a positive integer, got '" +
                         std::string(tok.text) + "'");
  }
  return value;
}

void validate(int dim, const std::vector<Hyperplane>& hps) {
  if (dim < 1) throw std::invalid_argument("arrangement dimension must be positive");
  for (std::size_t i = 0; i < hps.size(); ++i) {
    const auto& h = hps[i];
    if (h.normal.size() != static_cast<std::size_t>(dim)) {
      throw std::invalid_argument("hyperplane " + std::to_string(i + 1) +
                                  ": normal has dimension " +
                                  std::to_string(h.normal.size()) + ", expected " +
                                  std::to_string(dim));
    }
    if (std::all_of(h.normal.begin(), h.normal.end(),
                    [](const Rational& q) { return q.is_zero(); })) {
      throw std::invalid_argument("hyperplane " + std::to_string(i + 1) +
                                  " has a zero normal vector");
    }
  }
  EchelonBasis basis(static_cast<std::size_t>(dim));
  for (const auto& h : hps) {
    basis.try_add(h.normal);
    if (basis.rank() == static_cast<std::size_t>(dim)) return;
  }
  throw NoVertexError("no vertex exists: normals have rank " +
                      std::to_string(basis.rank()) + " < d = " + std::to_string(dim));
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

Arrangement::Arrangement(int dim, std::vector<Hyperplane> hyperplanes)
    : dim_(dim), hyperplanes_(std::move(hyperplanes)), label_map_(hyperplanes_.size()) {
  validate(dim_, hyperplanes_);
  std::iota(label_map_.begin(), label_map_.end(), 1);
}

Arrangement::Arrangement(int dim, std::vector<Hyperplane> hyperplanes,
                         std::vector<Label> label_map)
    : dim_(dim), hyperplanes_(std::move(hyperplanes)), label_map_(std::move(label_map)) {
  validate(dim_, hyperplanes_);
  if (label_map_.size() != hyperplanes_.size()) {
    throw std::invalid_argument("label map size does not match hyperplane count");
  }
  std::vector<Label> sorted = label_map_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<Label>(i + 1)) {
      throw std::invalid_argument("label map is not a permutation of 1..n");
    }
  }
}

LabelSet Arrangement::to_user(std::span<const Label> internal) const {
  LabelSet out;
  out.reserve(internal.size());
  for (Label l : internal) out.push_back(user_label(l));
  std::sort(out.begin(), out.end());
  return out;
}

Arrangement Arrangement::in_user_order() const {
  std::vector<Hyperplane> ordered(hyperplanes_.size());
  for (std::size_t k = 0; k < hyperplanes_.size(); ++k) {
    ordered[static_cast<std::size_t>(label_map_[k] - 1)] = hyperplanes_[k];
  }
  return Arrangement(dim_, std::move(ordered));
}

Arrangement parse_arrangement(std::string_view text) {
  int dim = 0;
  int count = 0;
  bool have_header = false;
  std::vector<Hyperplane> hps;
  std::size_t line_no = 0;
  std::size_t last_line = 0;

  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    last_line = line_no;

    if (!have_header) {
      if (tokens.size() != 2) {
        throw ParseError(line_no, tokens.size() > 2 ? tokens[2].column : tokens[0].column,
                         "header must be 'd n'");
      }
      dim = parse_count(tokens[0], line_no, "dimension d");
      count = parse_count(tokens[1], line_no, "hyperplane count n");
      have_header = true;
      continue;
    }
    if (static_cast<int>(hps.size()) == count) {
      throw ParseError(line_no, tokens[0].column,
                       "more than n = " + std::to_string(count) + " hyperplane lines");
    }
    if (tokens.size() != static_cast<std::size_t>(dim) + 1) {
      const std::size_t col = tokens.size() > static_cast<std::size_t>(dim) + 1
                                  ? tokens[static_cast<std::size_t>(dim) + 1].column
                                  : line.size() + 1;
      throw ParseError(line_no, col,
                       "expected " + std::to_string(dim + 1) + " values 'b c1 .. cd', got " +
                           std::to_string(tokens.size()));
    }
    Hyperplane h;
    for (std::size_t t = 0; t < tokens.size(); ++t) {
      Rational q;
      try {
        q = Rational::parse(tokens[t].text);
      } catch (const std::exception& e) {
        throw ParseError(line_no, tokens[t].column, e.what());
      }
      if (t == 0) {
        h.offset = q;
      } else {
        h.normal.push_back(q);
      }
    }
    if (std::all_of(h.normal.begin(), h.normal.end(),
                    [](const Rational& q) { return q.is_zero(); })) {
      throw ParseError(line_no, tokens[1].column, "zero normal vector");
    }
    hps.push_back(std::move(h));
  }
  if (!have_header) throw ParseError(line_no + 1, 1, "missing 'd n' header");
  if (static_cast<int>(hps.size()) != count) {
    throw ParseError(last_line + 1, 1,
                     "expected " + std::to_string(count) + " hyperplanes, found " +
                         std::to_string(hps.size()));
  }
  return Arrangement(dim, std::move(hps));
}

std::string format_arrangement(const Arrangement& arr) {
  std::ostringstream out;
  out << arr.dim() << ' ' << arr.size() << '\n';
  for (const auto& h : arr.hyperplanes()) {
    out << h.offset;
    for (const auto& c : h.normal) out << ' ' << c;
    out << '\n';
  }
  return out.str();
}

Point vertex_from_cobasis(const Arrangement& arr, std::span<const Label> cobasis) {
  const auto d = static_cast<std::size_t>(arr.dim());
  if (cobasis.size() != d) {
    throw std::invalid_argument("co-basis must have exactly d labels");
  }
  RationalMatrix a(d, d);
  std::vector<Rational> rhs(d);
  for (std::size_t k = 0; k < d; ++k) {
    const auto& h = arr.hyperplane(cobasis[k]);
    for (std::size_t c = 0; c < d; ++c) a(k, c) = h.normal[c];
    rhs[k] = h.offset;
  }
  auto y = solve_square(std::move(a), std::move(rhs));
  if (!y) throw DependentCobasisError("co-basis normals are linearly dependent");
  return *std::move(y);
}

bool is_independent(const Arrangement& arr, std::span<const Label> labels) {
  EchelonBasis basis(static_cast<std::size_t>(arr.dim()));
  for (Label l : labels) {
    if (!basis.try_add(arr.hyperplane(l).normal)) return false;
  }
  return true;
}

LabelSet complement(std::span<const Label> labels, int n) {
  LabelSet out;
  out.reserve(static_cast<std::size_t>(n) - std::min<std::size_t>(labels.size(), n));
  auto it = labels.begin();
  for (Label l = 1; l <= n; ++l) {
    if (it != labels.end() && *it == l) {
      ++it;
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Initialization initial_cobasis(const Arrangement& arr) {
  const int d = arr.dim();
  const int n = arr.size();
  EchelonBasis basis(static_cast<std::size_t>(d));
  LabelSet selected;
  for (Label l = 1; l <= n && static_cast<int>(selected.size()) < d; ++l) {
    if (basis.try_add(arr.hyperplane(l).normal)) selected.push_back(l);
  }
  // Arrangement validation already guarantees full rank.
  const LabelSet rest = complement(selected, n);

  std::vector<Hyperplane> hps;
  std::vector<Label> map;
  hps.reserve(static_cast<std::size_t>(n));
  map.reserve(static_cast<std::size_t>(n));
  for (const LabelSet* part : {static_cast<const LabelSet*>(&selected), &rest}) {
    for (Label old : *part) {
      hps.push_back(arr.hyperplane(old));
      map.push_back(arr.user_label(old));
    }
  }
  LabelSet root(static_cast<std::size_t>(d));
  std::iota(root.begin(), root.end(), 1);
  return {Arrangement(d, std::move(hps), std::move(map)), std::move(root),
          std::move(selected)};
}

}  // namespace hypervert
