// Copyright 2026 The gqdec Authors
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

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "gq/bits.hpp"

namespace gq {

enum class EdgeKind : uint8_t { Horizontal = 0, Vertical = 1 };

struct EdgeCoord {
    EdgeKind kind;
    uint32_t row;
    uint32_t col;
    bool operator==(const EdgeCoord &) const = default;
};

struct VertexCoord {
    uint32_t row;
    uint32_t col;
    bool operator==(const VertexCoord &) const = default;
};

/// Winding parities of a pattern against the two transversal cuts.
struct Windings {
    bool horizontal = false;
    bool vertical = false;

    bool trivial() const {
        return !horizontal && !vertical;
    }
    /// Packs the pair as a class index in [0, 4): bit 0 horizontal, bit 1 vertical.
    uint8_t index() const {
        return static_cast<uint8_t>((horizontal ? 1 : 0) | (vertical ? 2 : 0));
    }
    static Windings from_index(uint8_t k) {
        return Windings{(k & 1) != 0, (k & 2) != 0};
    }
    Windings operator^(const Windings &o) const {
        return Windings{horizontal != o.horizontal, vertical != o.vertical};
    }
    bool operator==(const Windings &) const = default;
};

/// Periodic d x d square lattice with qubits on edges.
///
/// Indexing:
///   horizontal edge h(r,c) = r*d + c, joins vertex (r,c) and (r,c+1)
///   vertical edge   v(r,c) = d*d + r*d + c, joins vertex (r,c) and (r+1,c)
///   vertex (r,c) and face (r,c) both have index r*d + c
/// with all coordinates taken mod d. Face (r,c) has corners (r,c)..(r+1,c+1).
///
/// Immutable after construction.
class ToricLayout {
   public:
    explicit ToricLayout(uint32_t d);

    uint32_t distance() const noexcept {
        return d_;
    }
    size_t num_edges() const noexcept {
        return size_t{2} * d_ * d_;
    }
    size_t num_vertices() const noexcept {
        return size_t{d_} * d_;
    }
    size_t num_faces() const noexcept {
        return size_t{d_} * d_;
    }
    /// Independent stabilizer generators over both species: V + F - 2.
    size_t num_independent_stabilizers() const noexcept {
        return num_vertices() + num_faces() - 2;
    }
    /// k = E - (V + F - 2); always 2 on the torus.
    size_t num_logical_qubits() const noexcept {
        return num_edges() - num_independent_stabilizers();
    }

    uint32_t h_edge(int64_t r, int64_t c) const {
        return static_cast<uint32_t>(wrap(r) * d_ + wrap(c));
    }
    uint32_t v_edge(int64_t r, int64_t c) const {
        return static_cast<uint32_t>(d_ * d_ + wrap(r) * d_ + wrap(c));
    }
    uint32_t vertex(int64_t r, int64_t c) const {
        return static_cast<uint32_t>(wrap(r) * d_ + wrap(c));
    }
    uint32_t face(int64_t r, int64_t c) const {
        return vertex(r, c);
    }

    EdgeCoord edge_coord(uint32_t e) const;
    VertexCoord vertex_coord(uint32_t v) const {
        return VertexCoord{v / d_, v % d_};
    }

    /// Edges incident to vertex v: {h(r,c), h(r,c-1), v(r,c), v(r-1,c)}.
    const std::array<uint32_t, 4> &star(uint32_t v) const {
        return stars_[v];
    }
    /// Edges bounding face f: {h(r,c), h(r+1,c), v(r,c), v(r,c+1)}.
    const std::array<uint32_t, 4> &boundary(uint32_t f) const {
        return boundaries_[f];
    }
    /// The two vertices joined by edge e.
    const std::array<uint32_t, 2> &endpoints(uint32_t e) const {
        return endpoints_[e];
    }

    /// Cut detecting horizontal winding: {h(r,0) : r in [0,d)}.
    const EdgeBits &cut_horizontal() const noexcept {
        return cut_h_;
    }
    /// Cut detecting vertical winding: {v(0,c) : c in [0,d)}.
    const EdgeBits &cut_vertical() const noexcept {
        return cut_v_;
    }

    /// Representative nontrivial cycles: row 0 of horizontal edges (windings (1,0))
    /// and column 0 of vertical edges (windings (0,1)).
    EdgeBits row_cycle(uint32_t r = 0) const;
    EdgeBits column_cycle(uint32_t c = 0) const;

    /// Boundary of face f as an edge set.
    EdgeBits face_boundary(uint32_t f) const;

    EdgeBits empty_edges() const {
        return EdgeBits(num_edges());
    }
    Syndrome empty_checks() const {
        return Syndrome(num_vertices());
    }

    /// Maps an edge of this lattice to the edge of the dual lattice, indexed with
    /// the same conventions, so that face checks become vertex checks:
    /// h(r,c) -> v'(r-1,c), v(r,c) -> h'(r,c-1).
    uint32_t dual_edge(uint32_t e) const {
        return dual_of_[e];
    }
    uint32_t primal_edge(uint32_t dual_e) const {
        return primal_of_[dual_e];
    }
    EdgeBits to_dual(const EdgeBits &primal) const;
    EdgeBits from_dual(const EdgeBits &dual) const;

   private:
    uint64_t wrap(int64_t k) const {
        int64_t m = k % static_cast<int64_t>(d_);
        return static_cast<uint64_t>(m < 0 ? m + d_ : m);
    }

    uint32_t d_;
    std::vector<std::array<uint32_t, 4>> stars_;
    std::vector<std::array<uint32_t, 4>> boundaries_;
    std::vector<std::array<uint32_t, 2>> endpoints_;
    std::vector<uint32_t> dual_of_;
    std::vector<uint32_t> primal_of_;
    EdgeBits cut_h_;
    EdgeBits cut_v_;
};

/// Validates d (odd, >= 3) and builds the layout. Throws InvalidDistance.
ToricLayout build_layout(uint32_t d);

/// Parities of |pattern ∩ cut_h| and |pattern ∩ cut_v|. Throws SizeMismatch.
Windings logical_windings(const ToricLayout &layout, const EdgeBits &pattern);

}  // namespace gq
