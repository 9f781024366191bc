#pragma once

/**
 * @file catalog.hpp
 * @brief Groups of every non-prime-power order up to 47, named groups, the
 *        spec builder and group fingerprints.
 *
 * Each catalog entry is built from a recipe: a spec expression over the
 * standard constructors, a metacyclic presentation, or explicit permutation
 * generators. Every entry stores the fingerprint it must reproduce, so a
 * wrong recipe is caught before any census result is trusted.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "group.hpp"
#include "group_props.hpp"
#include "group_spec.hpp"
#include "ntheory.hpp"

namespace powerchord {

struct Fingerprint {
  std::uint64_t order = 0;
  bool abelian = false;
  std::uint64_t exponent = 0;
  std::uint64_t center_size = 0;
  std::map<std::uint64_t, std::uint64_t> order_classes;
  std::uint64_t conjugacy_classes = 0;

  /// Canonical one-line text, e.g. "order=6 abelian=0 exponent=6 center=1 classes=3 orders=1:1,2:3,3:2".
  std::string to_string() const {
    std::ostringstream os;
    os << "order=" << order << " abelian=" << abelian << " exponent=" << exponent << " center=" << center_size
       << " classes=" << conjugacy_classes << " orders=";
    bool first = true;
    for (const auto &[o, c] : order_classes) {
      os << (first ? "" : ",") << o << ":" << c;
      first = false;
    }
    return os.str();
  }

  friend bool operator==(const Fingerprint &, const Fingerprint &) = default;
};

inline Fingerprint fingerprint(const FiniteGroup &g) {
  Fingerprint f;
  f.order = g.order();
  f.abelian = is_abelian(g);
  f.exponent = exponent(g);
  f.center_size = center(g).size();
  f.order_classes = order_class_counts(g);
  f.conjugacy_classes = conjugacy_class_count(g);
  return f;
}

enum class RecipeKind { spec, metacyclic, permutations };

struct CatalogEntry {
  std::uint64_t order = 0;
  std::size_t index = 0; // 1-based within its order
  std::string name;
  RecipeKind kind = RecipeKind::spec;
  /// spec: expression text; metacyclic: "n,m,r,s"; permutations: "degree; cycles; cycles; ..."
  std::string recipe;
  std::string note;
  std::string expected_fingerprint;

  /// Text accepted by parse_spec that rebuilds this entry.
  std::string spec_text() const {
    return kind == RecipeKind::spec ? recipe : "G(" + std::to_string(order) + "," + std::to_string(index) + ")";
  }
};

namespace detail {

struct RawEntry {
  std::uint64_t order;
  const char *name;
  RecipeKind kind;
  const char *recipe;
  const char *note;
  const char *fingerprint;
};

// clang-format off
inline constexpr RawEntry kCatalog[] = {
  {6, "C6", RecipeKind::spec, "C6", "cyclic", "order=6 abelian=1 exponent=6 center=6 classes=6 orders=1:1,2:1,3:2,6:2"},
  {6, "S3", RecipeKind::spec, "S3", "symmetric group, = D3", "order=6 abelian=0 exponent=6 center=1 classes=3 orders=1:1,2:3,3:2"},
  {10, "C10", RecipeKind::spec, "C10", "cyclic", "order=10 abelian=1 exponent=10 center=10 classes=10 orders=1:1,2:1,5:4,10:4"},
  {10, "D5", RecipeKind::spec, "D5", "dihedral", "order=10 abelian=0 exponent=10 center=1 classes=4 orders=1:1,2:5,5:4"},
  {12, "C12", RecipeKind::spec, "C12", "cyclic", "order=12 abelian=1 exponent=12 center=12 classes=12 orders=1:1,2:1,3:2,4:2,6:2,12:4"},
  {12, "C2 x C6", RecipeKind::spec, "C2 x C6", "abelian", "order=12 abelian=1 exponent=6 center=12 classes=12 orders=1:1,2:3,3:2,6:6"},
  {12, "D6", RecipeKind::spec, "D6", "dihedral, = C2 x S3", "order=12 abelian=0 exponent=6 center=2 classes=6 orders=1:1,2:7,3:2,6:2"},
  {12, "A4", RecipeKind::spec, "A4", "alternating", "order=12 abelian=0 exponent=6 center=1 classes=4 orders=1:1,2:3,3:8"},
  {12, "Dic3", RecipeKind::spec, "Dic3", "dicyclic, = C3:C4", "order=12 abelian=0 exponent=12 center=2 classes=6 orders=1:1,2:1,3:2,4:6,6:2"},
  {14, "C14", RecipeKind::spec, "C14", "cyclic", "order=14 abelian=1 exponent=14 center=14 classes=14 orders=1:1,2:1,7:6,14:6"},
  {14, "D7", RecipeKind::spec, "D7", "dihedral", "order=14 abelian=0 exponent=14 center=1 classes=5 orders=1:1,2:7,7:6"},
  {15, "C15", RecipeKind::spec, "C15", "cyclic", "order=15 abelian=1 exponent=15 center=15 classes=15 orders=1:1,3:2,5:4,15:8"},
  {18, "C18", RecipeKind::spec, "C18", "cyclic", "order=18 abelian=1 exponent=18 center=18 classes=18 orders=1:1,2:1,3:2,6:2,9:6,18:6"},
  {18, "C3 x C6", RecipeKind::spec, "C3 x C6", "abelian", "order=18 abelian=1 exponent=6 center=18 classes=18 orders=1:1,2:1,3:8,6:8"},
  {18, "D9", RecipeKind::spec, "D9", "dihedral", "order=18 abelian=0 exponent=18 center=1 classes=6 orders=1:1,2:9,3:2,9:6"},
  {18, "C3 x S3", RecipeKind::spec, "C3 x S3", "direct product", "order=18 abelian=0 exponent=6 center=3 classes=9 orders=1:1,2:3,3:8,6:6"},
  {18, "(C3xC3):C2", RecipeKind::permutations, "6; (0 1 2); (3 4 5); (1 2)(4 5)",
   "generalized dihedral of C3 x C3: one involution inverts both cyclic factors", "order=18 abelian=0 exponent=6 center=1 classes=6 orders=1:1,2:9,3:8"},
  {20, "C20", RecipeKind::spec, "C20", "cyclic", "order=20 abelian=1 exponent=20 center=20 classes=20 orders=1:1,2:1,4:2,5:4,10:4,20:8"},
  {20, "C2 x C10", RecipeKind::spec, "C2 x C10", "abelian", "order=20 abelian=1 exponent=10 center=20 classes=20 orders=1:1,2:3,5:4,10:12"},
  {20, "D10", RecipeKind::spec, "D10", "dihedral", "order=20 abelian=0 exponent=10 center=2 classes=8 orders=1:1,2:11,5:4,10:4"},
  {20, "Dic5", RecipeKind::spec, "Dic5", "dicyclic", "order=20 abelian=0 exponent=20 center=2 classes=8 orders=1:1,2:1,4:10,5:4,10:4"},
  {20, "F5", RecipeKind::spec, "F5", "Frobenius group C5:C4, b a b^-1 = a^2", "order=20 abelian=0 exponent=20 center=1 classes=5 orders=1:1,2:5,4:10,5:4"},
  {21, "C21", RecipeKind::spec, "C21", "cyclic", "order=21 abelian=1 exponent=21 center=21 classes=21 orders=1:1,3:2,7:6,21:12"},
  {21, "C7:C3", RecipeKind::metacyclic, "7,3,2,0", "Frobenius group, b a b^-1 = a^2", "order=21 abelian=0 exponent=21 center=1 classes=5 orders=1:1,3:14,7:6"},
  {22, "C22", RecipeKind::spec, "C22", "cyclic", "order=22 abelian=1 exponent=22 center=22 classes=22 orders=1:1,2:1,11:10,22:10"},
  {22, "D11", RecipeKind::spec, "D11", "dihedral", "order=22 abelian=0 exponent=22 center=1 classes=7 orders=1:1,2:11,11:10"},
  {24, "C24", RecipeKind::spec, "C24", "cyclic", "order=24 abelian=1 exponent=24 center=24 classes=24 orders=1:1,2:1,3:2,4:2,6:2,8:4,12:4,24:8"},
  {24, "C2 x C12", RecipeKind::spec, "C2 x C12", "abelian", "order=24 abelian=1 exponent=12 center=24 classes=24 orders=1:1,2:3,3:2,4:4,6:6,12:8"},
  {24, "C2 x C2 x C6", RecipeKind::spec, "C2 x C2 x C6", "abelian", "order=24 abelian=1 exponent=6 center=24 classes=24 orders=1:1,2:7,3:2,6:14"},
  {24, "C3 x D4", RecipeKind::spec, "C3 x D4", "nilpotent", "order=24 abelian=0 exponent=12 center=6 classes=15 orders=1:1,2:5,3:2,4:2,6:10,12:4"},
  {24, "C3 x Q8", RecipeKind::spec, "C3 x Q8", "nilpotent", "order=24 abelian=0 exponent=12 center=6 classes=15 orders=1:1,2:1,3:2,4:6,6:2,12:12"},
  {24, "S4", RecipeKind::spec, "S4", "symmetric", "order=24 abelian=0 exponent=12 center=1 classes=5 orders=1:1,2:9,3:8,4:6"},
  {24, "SL(2,3)", RecipeKind::spec, "SL(2,3)", "matrices of determinant 1 over GF(3)", "order=24 abelian=0 exponent=12 center=2 classes=7 orders=1:1,2:1,3:8,4:6,6:8"},
  {24, "Dic6", RecipeKind::spec, "Dic6", "dicyclic", "order=24 abelian=0 exponent=12 center=2 classes=9 orders=1:1,2:1,3:2,4:14,6:2,12:4"},
  {24, "D12", RecipeKind::spec, "D12", "dihedral", "order=24 abelian=0 exponent=12 center=2 classes=9 orders=1:1,2:13,3:2,4:2,6:2,12:4"},
  {24, "C2 x A4", RecipeKind::spec, "C2 x A4", "direct product", "order=24 abelian=0 exponent=6 center=2 classes=8 orders=1:1,2:7,3:8,6:8"},
  {24, "C4 x S3", RecipeKind::spec, "C4 x S3", "direct product", "order=24 abelian=0 exponent=12 center=4 classes=12 orders=1:1,2:7,3:2,4:8,6:2,12:4"},
  {24, "C2 x C2 x S3", RecipeKind::spec, "C2 x C2 x S3", "direct product, = C2 x D6", "order=24 abelian=0 exponent=6 center=4 classes=12 orders=1:1,2:15,3:2,6:6"},
  {24, "C2 x Dic3", RecipeKind::spec, "C2 x Dic3", "direct product", "order=24 abelian=0 exponent=12 center=4 classes=12 orders=1:1,2:3,3:2,4:12,6:6"},
  {24, "C3:C8", RecipeKind::metacyclic, "3,8,2,0", "C8 acting on C3 by inversion", "order=24 abelian=0 exponent=24 center=4 classes=12 orders=1:1,2:1,3:2,4:2,6:2,8:12,12:4"},
  {24, "C3:D4", RecipeKind::permutations, "7; (0 1 2); (0 1)(3 4 5 6); (4 6)",
   "S3 and D4 glued over a common C2 quotient; D4 acts on C3 with kernel C2 x C2", "order=24 abelian=0 exponent=12 center=2 classes=9 orders=1:1,2:9,3:2,4:6,6:6"},
  {26, "C26", RecipeKind::spec, "C26", "cyclic", "order=26 abelian=1 exponent=26 center=26 classes=26 orders=1:1,2:1,13:12,26:12"},
  {26, "D13", RecipeKind::spec, "D13", "dihedral", "order=26 abelian=0 exponent=26 center=1 classes=8 orders=1:1,2:13,13:12"},
  {28, "C28", RecipeKind::spec, "C28", "cyclic", "order=28 abelian=1 exponent=28 center=28 classes=28 orders=1:1,2:1,4:2,7:6,14:6,28:12"},
  {28, "C2 x C14", RecipeKind::spec, "C2 x C14", "abelian", "order=28 abelian=1 exponent=14 center=28 classes=28 orders=1:1,2:3,7:6,14:18"},
  {28, "D14", RecipeKind::spec, "D14", "dihedral", "order=28 abelian=0 exponent=14 center=2 classes=10 orders=1:1,2:15,7:6,14:6"},
  {28, "Dic7", RecipeKind::spec, "Dic7", "dicyclic", "order=28 abelian=0 exponent=28 center=2 classes=10 orders=1:1,2:1,4:14,7:6,14:6"},
  {30, "C30", RecipeKind::spec, "C30", "cyclic", "order=30 abelian=1 exponent=30 center=30 classes=30 orders=1:1,2:1,3:2,5:4,6:2,10:4,15:8,30:8"},
  {30, "D15", RecipeKind::spec, "D15", "dihedral", "order=30 abelian=0 exponent=30 center=1 classes=9 orders=1:1,2:15,3:2,5:4,15:8"},
  {30, "C5 x S3", RecipeKind::spec, "C5 x S3", "direct product", "order=30 abelian=0 exponent=30 center=5 classes=15 orders=1:1,2:3,3:2,5:4,10:12,15:8"},
  {30, "C3 x D5", RecipeKind::spec, "C3 x D5", "direct product", "order=30 abelian=0 exponent=30 center=3 classes=12 orders=1:1,2:5,3:2,5:4,6:10,15:8"},
  {33, "C33", RecipeKind::spec, "C33", "cyclic", "order=33 abelian=1 exponent=33 center=33 classes=33 orders=1:1,3:2,11:10,33:20"},
  {34, "C34", RecipeKind::spec, "C34", "cyclic", "order=34 abelian=1 exponent=34 center=34 classes=34 orders=1:1,2:1,17:16,34:16"},
  {34, "D17", RecipeKind::spec, "D17", "dihedral", "order=34 abelian=0 exponent=34 center=1 classes=10 orders=1:1,2:17,17:16"},
  {35, "C35", RecipeKind::spec, "C35", "cyclic", "order=35 abelian=1 exponent=35 center=35 classes=35 orders=1:1,5:4,7:6,35:24"},
  {36, "C36", RecipeKind::spec, "C36", "cyclic", "order=36 abelian=1 exponent=36 center=36 classes=36 orders=1:1,2:1,3:2,4:2,6:2,9:6,12:4,18:6,36:12"},
  {36, "C2 x C18", RecipeKind::spec, "C2 x C18", "abelian", "order=36 abelian=1 exponent=18 center=36 classes=36 orders=1:1,2:3,3:2,6:6,9:6,18:18"},
  {36, "C3 x C12", RecipeKind::spec, "C3 x C12", "abelian", "order=36 abelian=1 exponent=12 center=36 classes=36 orders=1:1,2:1,3:8,4:2,6:8,12:16"},
  {36, "C6 x C6", RecipeKind::spec, "C6 x C6", "abelian", "order=36 abelian=1 exponent=6 center=36 classes=36 orders=1:1,2:3,3:8,6:24"},
  {36, "D18", RecipeKind::spec, "D18", "dihedral", "order=36 abelian=0 exponent=18 center=2 classes=12 orders=1:1,2:19,3:2,6:2,9:6,18:6"},
  {36, "Dic9", RecipeKind::spec, "Dic9", "dicyclic", "order=36 abelian=0 exponent=36 center=2 classes=12 orders=1:1,2:1,3:2,4:18,6:2,9:6,18:6"},
  {36, "C6 x S3", RecipeKind::spec, "C6 x S3", "direct product", "order=36 abelian=0 exponent=6 center=6 classes=18 orders=1:1,2:7,3:8,6:20"},
  {36, "C3 x A4", RecipeKind::spec, "C3 x A4", "direct product", "order=36 abelian=0 exponent=6 center=3 classes=12 orders=1:1,2:3,3:26,6:6"},
  {36, "S3 x S3", RecipeKind::spec, "S3 x S3", "direct product", "order=36 abelian=0 exponent=6 center=1 classes=9 orders=1:1,2:15,3:8,6:12"},
  {36, "C3 x Dic3", RecipeKind::spec, "C3 x Dic3", "direct product", "order=36 abelian=0 exponent=12 center=6 classes=18 orders=1:1,2:1,3:8,4:6,6:8,12:12"},
  {36, "C2 x (C3xC3):C2", RecipeKind::spec, "C2 x G(18,5)", "C2 times the generalized dihedral group of order 18", "order=36 abelian=0 exponent=6 center=2 classes=12 orders=1:1,2:19,3:8,6:8"},
  {36, "C3:Dic3", RecipeKind::permutations, "10; (0 1 2); (3 4 5); (1 2)(4 5)(6 7 8 9)",
   "(C3 x C3):C4 where the C4 acts by inversion with kernel C2", "order=36 abelian=0 exponent=12 center=2 classes=12 orders=1:1,2:1,3:8,4:18,6:8"},
  {36, "(C2xC2):C9", RecipeKind::permutations, "13; (0 1)(2 3); (0 2)(1 3); (1 2 3)(4 5 6 7 8 9 10 11 12)",
   "non-split extension C3.A4: C9 acts on the Klein group through C3", "order=36 abelian=0 exponent=18 center=3 classes=12 orders=1:1,2:3,3:2,6:6,9:24"},
  {36, "(C3xC3):C4", RecipeKind::permutations, "9; (0 3 6)(1 4 7)(2 5 8); (0 1 2)(3 4 5)(6 7 8); (1 3 2 6)(4 5 8 7)",
   "affine maps of GF(3)^2: translations and (x,y) -> (y,-x); C4 acts faithfully", "order=36 abelian=0 exponent=12 center=1 classes=6 orders=1:1,2:9,3:8,4:18"},
  {38, "C38", RecipeKind::spec, "C38", "cyclic", "order=38 abelian=1 exponent=38 center=38 classes=38 orders=1:1,2:1,19:18,38:18"},
  {38, "D19", RecipeKind::spec, "D19", "dihedral", "order=38 abelian=0 exponent=38 center=1 classes=11 orders=1:1,2:19,19:18"},
  {39, "C39", RecipeKind::spec, "C39", "cyclic", "order=39 abelian=1 exponent=39 center=39 classes=39 orders=1:1,3:2,13:12,39:24"},
  {39, "C13:C3", RecipeKind::metacyclic, "13,3,3,0", "Frobenius group, b a b^-1 = a^3", "order=39 abelian=0 exponent=39 center=1 classes=7 orders=1:1,3:26,13:12"},
  {40, "C40", RecipeKind::spec, "C40", "cyclic", "order=40 abelian=1 exponent=40 center=40 classes=40 orders=1:1,2:1,4:2,5:4,8:4,10:4,20:8,40:16"},
  {40, "C2 x C20", RecipeKind::spec, "C2 x C20", "abelian", "order=40 abelian=1 exponent=20 center=40 classes=40 orders=1:1,2:3,4:4,5:4,10:12,20:16"},
  {40, "C2 x C2 x C10", RecipeKind::spec, "C2 x C2 x C10", "abelian", "order=40 abelian=1 exponent=10 center=40 classes=40 orders=1:1,2:7,5:4,10:28"},
  {40, "C5 x D4", RecipeKind::spec, "C5 x D4", "nilpotent", "order=40 abelian=0 exponent=20 center=10 classes=25 orders=1:1,2:5,4:2,5:4,10:20,20:8"},
  {40, "C5 x Q8", RecipeKind::spec, "C5 x Q8", "nilpotent", "order=40 abelian=0 exponent=20 center=10 classes=25 orders=1:1,2:1,4:6,5:4,10:4,20:24"},
  {40, "D20", RecipeKind::spec, "D20", "dihedral", "order=40 abelian=0 exponent=20 center=2 classes=13 orders=1:1,2:21,4:2,5:4,10:4,20:8"},
  {40, "Dic10", RecipeKind::spec, "Dic10", "dicyclic", "order=40 abelian=0 exponent=20 center=2 classes=13 orders=1:1,2:1,4:22,5:4,10:4,20:8"},
  {40, "C2 x F5", RecipeKind::spec, "C2 x F5", "direct product", "order=40 abelian=0 exponent=20 center=2 classes=10 orders=1:1,2:11,4:20,5:4,10:4"},
  {40, "C4 x D5", RecipeKind::spec, "C4 x D5", "direct product", "order=40 abelian=0 exponent=20 center=4 classes=16 orders=1:1,2:11,4:12,5:4,10:4,20:8"},
  {40, "C2 x C2 x D5", RecipeKind::spec, "C2 x C2 x D5", "direct product, = C2 x D10", "order=40 abelian=0 exponent=10 center=4 classes=16 orders=1:1,2:23,5:4,10:12"},
  {40, "C2 x Dic5", RecipeKind::spec, "C2 x Dic5", "direct product", "order=40 abelian=0 exponent=20 center=4 classes=16 orders=1:1,2:3,4:20,5:4,10:12"},
  {40, "C5:C8", RecipeKind::metacyclic, "5,8,4,0", "C8 acting on C5 by inversion (b a b^-1 = a^4)", "order=40 abelian=0 exponent=40 center=4 classes=16 orders=1:1,2:1,4:2,5:4,8:20,10:4,20:8"},
  {40, "C5:C8 faithful", RecipeKind::metacyclic, "5,8,2,0", "C8 acting on C5 through C4 (b a b^-1 = a^2)", "order=40 abelian=0 exponent=40 center=2 classes=10 orders=1:1,2:1,4:10,5:4,8:20,10:4"},
  {40, "C5:D4", RecipeKind::permutations, "9; (0 1 2 3 4); (1 4)(2 3)(5 6 7 8); (6 8)",
   "D5 and D4 glued over a common C2 quotient; D4 acts on C5 with kernel C2 x C2", "order=40 abelian=0 exponent=20 center=2 classes=13 orders=1:1,2:13,4:10,5:4,10:12"},
  {42, "C42", RecipeKind::spec, "C42", "cyclic", "order=42 abelian=1 exponent=42 center=42 classes=42 orders=1:1,2:1,3:2,6:2,7:6,14:6,21:12,42:12"},
  {42, "D21", RecipeKind::spec, "D21", "dihedral", "order=42 abelian=0 exponent=42 center=1 classes=12 orders=1:1,2:21,3:2,7:6,21:12"},
  {42, "F7", RecipeKind::spec, "F7", "Frobenius group C7:C6, b a b^-1 = a^3", "order=42 abelian=0 exponent=42 center=1 classes=7 orders=1:1,2:7,3:14,6:14,7:6"},
  {42, "C7 x S3", RecipeKind::spec, "C7 x S3", "direct product", "order=42 abelian=0 exponent=42 center=7 classes=21 orders=1:1,2:3,3:2,7:6,14:18,21:12"},
  {42, "C3 x D7", RecipeKind::spec, "C3 x D7", "direct product", "order=42 abelian=0 exponent=42 center=3 classes=15 orders=1:1,2:7,3:2,6:14,7:6,21:12"},
  {42, "C2 x C7:C3", RecipeKind::spec, "C2 x G(21,2)", "C2 times the Frobenius group of order 21", "order=42 abelian=0 exponent=42 center=2 classes=10 orders=1:1,2:1,3:14,6:14,7:6,14:6"},
  {44, "C44", RecipeKind::spec, "C44", "cyclic", "order=44 abelian=1 exponent=44 center=44 classes=44 orders=1:1,2:1,4:2,11:10,22:10,44:20"},
  {44, "C2 x C22", RecipeKind::spec, "C2 x C22", "abelian", "order=44 abelian=1 exponent=22 center=44 classes=44 orders=1:1,2:3,11:10,22:30"},
  {44, "D22", RecipeKind::spec, "D22", "dihedral", "order=44 abelian=0 exponent=22 center=2 classes=14 orders=1:1,2:23,11:10,22:10"},
  {44, "Dic11", RecipeKind::spec, "Dic11", "dicyclic", "order=44 abelian=0 exponent=44 center=2 classes=14 orders=1:1,2:1,4:22,11:10,22:10"},
  {45, "C45", RecipeKind::spec, "C45", "cyclic", "order=45 abelian=1 exponent=45 center=45 classes=45 orders=1:1,3:2,5:4,9:6,15:8,45:24"},
  {45, "C3 x C15", RecipeKind::spec, "C3 x C15", "abelian", "order=45 abelian=1 exponent=15 center=45 classes=45 orders=1:1,3:8,5:4,15:32"},
  {46, "C46", RecipeKind::spec, "C46", "cyclic", "order=46 abelian=1 exponent=46 center=46 classes=46 orders=1:1,2:1,23:22,46:22"},
  {46, "D23", RecipeKind::spec, "D23", "dihedral", "order=46 abelian=0 exponent=46 center=1 classes=13 orders=1:1,2:23,23:22"},
};
// clang-format on

} // namespace detail

/// Number of isomorphism types for every non-prime-power order the catalog covers.
inline const std::map<std::uint64_t, std::size_t> &catalog_counts() {
  static const std::map<std::uint64_t, std::size_t> counts{
      {6, 2},   {10, 2},  {12, 5},  {14, 2},  {15, 1},  {18, 5},  {20, 5},  {21, 2},
      {22, 2},  {24, 15}, {26, 2},  {28, 4},  {30, 4},  {33, 1},  {34, 2},  {35, 1},
      {36, 14}, {38, 2},  {39, 2},  {40, 14}, {42, 6},  {44, 4},  {45, 2},  {46, 2}};
  return counts;
}

inline constexpr std::uint64_t kCatalogMaxOrder = 47;

inline const std::vector<CatalogEntry> &catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    std::map<std::uint64_t, std::size_t> next;
    for (const auto &r : detail::kCatalog) {
      CatalogEntry e;
      e.order = r.order;
      e.index = ++next[r.order];
      e.name = r.name;
      e.kind = r.kind;
      e.recipe = r.recipe;
      e.note = r.note;
      e.expected_fingerprint = r.fingerprint;
      out.push_back(std::move(e));
    }
    return out;
  }();
  return entries;
}

/// True for orders the catalog lists explicitly (non-prime-power n <= 47, n > 1).
inline bool catalog_covers(std::uint64_t n) { return catalog_counts().count(n) != 0; }

/// All entries of order n. Throws ConstructionError for orders outside the catalog.
inline std::vector<CatalogEntry> catalog_for_order(std::uint64_t n) {
  if (!catalog_covers(n)) {
    if (n >= 2 && n <= kCatalogMaxOrder && ntheory::is_prime_power(n))
      throw ConstructionError("order " + std::to_string(n) + " is a prime power; use prime_power_spot_checks");
    throw ConstructionError("order " + std::to_string(n) + " is outside the catalog");
  }
  std::vector<CatalogEntry> out;
  for (const auto &e : catalog())
    if (e.order == n)
      out.push_back(e);
  return out;
}

inline const CatalogEntry &catalog_entry(std::uint64_t order, std::size_t index) {
  for (const auto &e : catalog())
    if (e.order == order && e.index == index)
      return e;
  throw ConstructionError("no catalog entry G(" + std::to_string(order) + "," + std::to_string(index) + ")");
}

/**
 * Two representative groups for a prime-power order: the cyclic group and
 * an elementary-abelian (or otherwise non-cyclic) group of the same order.
 */
inline std::vector<std::string> prime_power_spot_checks(std::uint64_t n) {
  auto pp = ntheory::is_prime_power(n);
  if (!pp)
    throw InvalidInput(std::to_string(n) + " is not a prime power");
  std::vector<std::string> out{"C" + std::to_string(n)};
  if (pp->exponent == 1)
    return out;
  if (pp->prime == 2 && pp->exponent >= 3) {
    out.push_back("D" + std::to_string(n / 2));
    return out;
  }
  std::string elem;
  for (unsigned i = 0; i < pp->exponent; ++i)
    elem += (i ? " x C" : "C") + std::to_string(pp->prime);
  out.push_back(elem);
  return out;
}

/// Standard degree-11 generators of the Mathieu group M11.
inline const std::vector<std::string> &m11_generators() {
  static const std::vector<std::string> gens{"(0 1 2 3 4 5 6 7 8 9 10)", "(2 6 10 7)(3 9 4 5)"};
  return gens;
}

inline FiniteGroup build(const GroupSpec &spec);

namespace detail {

inline std::vector<std::string> split_recipe(const std::string &text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ';') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  for (auto &p : parts) {
    const auto b = p.find_first_not_of(' ');
    const auto e = p.find_last_not_of(' ');
    p = b == std::string::npos ? std::string{} : p.substr(b, e - b + 1);
  }
  return parts;
}

inline FiniteGroup build_entry(const CatalogEntry &e) {
  FiniteGroup g;
  switch (e.kind) {
  case RecipeKind::spec:
    g = build(parse_spec(e.recipe));
    break;
  case RecipeKind::metacyclic: {
    std::vector<std::uint64_t> v;
    std::stringstream ss(e.recipe);
    std::string tok;
    while (std::getline(ss, tok, ','))
      v.push_back(std::stoull(tok));
    if (v.size() != 4)
      throw ConstructionError("malformed metacyclic recipe for " + e.name);
    g = metacyclic(v[0], v[1], v[2], v[3]);
    break;
  }
  case RecipeKind::permutations: {
    const auto parts = split_recipe(e.recipe);
    const std::size_t degree = std::stoul(parts.at(0));
    std::vector<Permutation> gens;
    for (std::size_t i = 1; i < parts.size(); ++i)
      gens.push_back(Permutation::parse(parts[i], degree));
    g = from_permutation_generators(gens);
    break;
  }
  }
  if (g.order() != e.order)
    throw ConstructionError("catalog entry " + e.name + " built with order " + std::to_string(g.order()));
  return g.renamed(e.name);
}

inline FiniteGroup build_atom(const SpecAtom &a) {
  const auto &p = a.params;
  if (a.name == "C")
    return cyclic(p[0]);
  if (a.name == "D")
    return dihedral(p[0]);
  if (a.name == "Dic")
    return dicyclic(p[0]);
  if (a.name == "Q")
    return dicyclic(p[0] / 4).renamed("Q" + std::to_string(p[0]));
  if (a.name == "S")
    return symmetric(p[0]);
  if (a.name == "A")
    return alternating(p[0]);
  if (a.name == "F")
    return p[0] == 5 ? metacyclic(5, 4, 2, 0, "F5") : metacyclic(7, 6, 3, 0, "F7");
  if (a.name == "M") {
    std::vector<Permutation> gens;
    for (const auto &s : m11_generators())
      gens.push_back(Permutation::parse(s, 11));
    return from_permutation_generators(gens, "M11");
  }
  if (a.name == "SL" || a.name == "GL" || a.name == "PSL") {
    if (p[0] > 3)
      throw ConstructionError(a.name + ": matrix dimension must be at most 3");
    const auto d = static_cast<unsigned>(p[0]);
    FiniteGroup g = a.name == "GL" ? general_linear(p[1], d) : special_linear(p[1], d);
    if (a.name == "PSL")
      g = projective_quotient(g);
    return g.renamed(render(a));
  }
  if (a.name == "G")
    return build_entry(catalog_entry(p[0], p[1]));
  throw ConstructionError("no constructor for " + a.name);
}

} // namespace detail

/// Build the group a spec describes; products fold left to right.
inline FiniteGroup build(const GroupSpec &spec) {
  if (spec.factors.empty())
    throw ConstructionError("empty group spec");
  FiniteGroup g = detail::build_atom(spec.factors.front());
  for (std::size_t i = 1; i < spec.factors.size(); ++i)
    g = direct_product(g, detail::build_atom(spec.factors[i]));
  if (spec.is_product())
    g = g.renamed(render(spec));
  return g;
}

inline FiniteGroup build(std::string_view text) { return build(parse_spec(text)); }

inline FiniteGroup build(const CatalogEntry &e) { return detail::build_entry(e); }

} // namespace powerchord
