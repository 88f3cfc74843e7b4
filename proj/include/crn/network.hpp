// Copyright 2026 The crn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crn/rational.hpp"

namespace crn {

/// Thrown when an operation is structurally valid but exceeds a configured
/// desk-scale cap (arrangement dimension, cell count, dense-edge count).
struct CapabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Ordered species names; the order fixes the coordinate system of every
/// vertex in Q^n.
struct SpeciesContext {
  std::vector<std::string> names;

  SpeciesContext() = default;
  explicit SpeciesContext(std::vector<std::string> names_) : names(std::move(names_)) {
    std::set<std::string> seen;
    for (const std::string& s : names) {
      if (s.empty()) throw std::invalid_argument("SpeciesContext: empty species name");
      if (!seen.insert(s).second)
        throw std::invalid_argument("SpeciesContext: duplicate species '" + s + "'");
    }
  }

  size_t dim() const { return names.size(); }
  bool operator==(const SpeciesContext& o) const { return names == o.names; }
  bool operator!=(const SpeciesContext& o) const { return !(*this == o); }
};

/// Directed edge between vertex indices.
struct Reaction {
  size_t source;
  size_t target;
  bool operator==(const Reaction& o) const { return source == o.source && target == o.target; }
};

/// A finite directed graph embedded in Q^n: vertices are exact points
/// (complexes), edges are reactions. Vertices must be pairwise distinct
/// points; self-loops and parallel edges are rejected at construction.
/// Isolated vertices are allowed and participate in vertex/linkage counts.
class ReactionNetwork {
 public:
  ReactionNetwork(SpeciesContext ctx, std::vector<RatVec> vertices, std::vector<Reaction> reactions)
      : ctx_(std::move(ctx)), vertices_(std::move(vertices)), reactions_(std::move(reactions)) {
    std::map<RatVec, size_t, RatVecLess> seen;
    for (size_t i = 0; i < vertices_.size(); ++i) {
      if (vertices_[i].size() != ctx_.dim())
        throw std::invalid_argument("ReactionNetwork: vertex dimension mismatch");
      if (!seen.emplace(vertices_[i], i).second)
        throw std::invalid_argument("ReactionNetwork: duplicate vertex " + vec_str(vertices_[i]));
    }
    std::set<std::pair<size_t, size_t>> edges;
    for (const Reaction& r : reactions_) {
      if (r.source >= vertices_.size() || r.target >= vertices_.size())
        throw std::invalid_argument("ReactionNetwork: reaction index out of range");
      if (r.source == r.target)
        throw std::invalid_argument("ReactionNetwork: self-loop at " + vec_str(vertices_[r.source]));
      if (!edges.emplace(r.source, r.target).second)
        throw std::invalid_argument("ReactionNetwork: parallel edge");
    }
  }

  const SpeciesContext& context() const { return ctx_; }
  size_t dim() const { return ctx_.dim(); }
  const std::vector<RatVec>& vertices() const { return vertices_; }
  const std::vector<Reaction>& reactions() const { return reactions_; }
  size_t num_vertices() const { return vertices_.size(); }
  size_t num_reactions() const { return reactions_.size(); }

  RatVec reaction_vector(size_t e) const {
    return vec_sub(vertices_[reactions_[e].target], vertices_[reactions_[e].source]);
  }

  std::vector<RatVec> reaction_vectors() const {
    std::vector<RatVec> vs;
    vs.reserve(reactions_.size());
    for (size_t e = 0; e < reactions_.size(); ++e) vs.push_back(reaction_vector(e));
    return vs;
  }

  /// Indices of vertices with at least one outgoing reaction, ascending.
  std::vector<size_t> source_indices() const {
    std::vector<char> is_src(vertices_.size(), 0);
    for (const Reaction& r : reactions_) is_src[r.source] = 1;
    std::vector<size_t> out;
    for (size_t i = 0; i < vertices_.size(); ++i)
      if (is_src[i]) out.push_back(i);
    return out;
  }

  std::vector<size_t> isolated_vertices() const {
    std::vector<char> touched(vertices_.size(), 0);
    for (const Reaction& r : reactions_) {
      touched[r.source] = 1;
      touched[r.target] = 1;
    }
    std::vector<size_t> out;
    for (size_t i = 0; i < vertices_.size(); ++i)
      if (!touched[i]) out.push_back(i);
    return out;
  }

  bool operator==(const ReactionNetwork& o) const {
    return ctx_ == o.ctx_ && vertices_ == o.vertices_ && reactions_ == o.reactions_;
  }

 private:
  SpeciesContext ctx_;
  std::vector<RatVec> vertices_;
  std::vector<Reaction> reactions_;
};

/// A network with one strictly positive rate per reaction. Absent edges are
/// zero-rate by convention, so a rate of zero is a construction error.
class MassActionSystem {
 public:
  MassActionSystem(ReactionNetwork network, std::vector<Rat> rates)
      : network_(std::move(network)), rates_(std::move(rates)) {
    if (rates_.size() != network_.num_reactions())
      throw std::invalid_argument("MassActionSystem: one rate per reaction required");
    for (const Rat& k : rates_)
      if (k <= 0) throw std::invalid_argument("MassActionSystem: rates must be strictly positive");
  }

  const ReactionNetwork& network() const { return network_; }
  const std::vector<Rat>& rates() const { return rates_; }

  bool operator==(const MassActionSystem& o) const {
    return network_ == o.network_ && rates_ == o.rates_;
  }

 private:
  ReactionNetwork network_;
  std::vector<Rat> rates_;
};

}  // namespace crn
