#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "e6/rep78.hpp"

namespace e6 {

/// Basis key for the product table: the vector with w^p in coordinate k of
/// block t. Signs are factored out before lookup. 117 keys in total.
struct Key {
    int t, k, p;  // block, coordinate, phase exponent (0,1,2)

    int index() const { return t * 9 + k * 3 + p; }
    static Key fromIndex(int i) { return {i / 9, (i / 3) % 3, i % 3}; }
    Eis scalar() const { return eisOmegaPow(p); }
    Vec78 vec() const { return monomialVec(t, k, scalar()); }
    friend bool operator==(const Key& a, const Key& b) {
        return a.t == b.t && a.k == b.k && a.p == b.p;
    }
};

constexpr int kNumKeys = 117;

struct ScaledKey {
    int sign;  // +1 or -1
    Key key;
};

/// Image of a key under a monomial linear operator (a, b, d, e and their
/// words). Fails if the operator is not monomial-linear on that block.
std::optional<ScaledKey> applyToKey(const BlockOperator& op, const Key& key);

enum class Provenance : std::uint8_t { None, Seed, SameBlockZero, GeneratorImage, Antisymmetry };

/// Map from ordered pairs of keys to products, filled by orbit closure.
struct ProductTable {
    std::vector<std::optional<Vec78>> entry;    // kNumKeys * kNumKeys
    std::vector<Provenance> prov;

    ProductTable()
        : entry(kNumKeys * kNumKeys), prov(kNumKeys * kNumKeys, Provenance::None) {}

    static int pairIndex(const Key& x, const Key& y) { return x.index() * kNumKeys + y.index(); }
    const std::optional<Vec78>& get(const Key& x, const Key& y) const {
        return entry[pairIndex(x, y)];
    }
};

struct PropagationError {
    enum class Kind { Conflict, Incomplete } kind;
    std::string detail;
};

/// The two seed products of the construction plus all same-block zeros.
ProductTable seedProducts();

/// Seeds taken from the six displayed 3x3 blocks of the published
/// multiplication table (block pairs (0,1),(0,3),(0,9),(1,3),(3,9),(9,1)),
/// plus same-block zeros.
ProductTable tableSeeds();

/// Closure of the table under generator images of known products and
/// antisymmetry. Deterministic; returns an error on conflict or if some
/// cross-block pair is left unassigned.
std::optional<PropagationError> propagate(ProductTable& table,
                                          const std::vector<BlockOperator>& gens);

/// Sparse exact tensor over the canonical real basis b(t,k,s) = 6t+2k+s
/// (s=0: unit 1, s=1: unit w). Stored for u < v only; antisymmetry is
/// implicit in the storage.
struct StructureTensor {
    // rows[u*78+v] for u < v, each sorted by target index w.
    std::vector<std::vector<std::pair<int, Rational>>> rows;

    StructureTensor() : rows(kRealDim * kRealDim) {}

    /// [e_u, e_v] as (index, coefficient) pairs; handles u > v by sign.
    std::vector<std::pair<int, Rational>> bracketRow(int u, int v) const;
    friend bool operator==(const StructureTensor& x, const StructureTensor& y);
};

constexpr int basisIndex(int t, int k, int s) { return 6 * t + 2 * k + s; }

/// Collapse a completed product table onto the canonical real basis.
StructureTensor tensorFromTable(const ProductTable& table);

struct BuildResult {
    ProductTable table;
    StructureTensor tensor;
};

/// Orbit propagation from the two seed products under {a,b,d,e}.
BuildResult buildByPropagation(const Generators& g);
/// Independent construction from the published table, extended by a,b
/// translation and the phase action of D.
BuildResult buildFromTable(const Generators& g);

/// Canonical export: header line then "u v w n[/d]" per stored constant.
std::string serializeTensor(const StructureTensor& t, const std::string& header =
                                "e6-sc v1 basis=6t+2k+s seed=paper");
StructureTensor parseTensor(const std::string& text, std::string* headerOut = nullptr);

/// Optional replacement seeds for experimentation: each non-empty line is
/// "t1 k1 p1 t2 k2 p2 : <vector literal>"; same-block zeros are added
/// automatically.
ProductTable seedsFromText(const std::string& text);

}  // namespace e6
