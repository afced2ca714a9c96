#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "crflag/satake.hpp"

namespace crflag {

/// Named real forms of simple Lie algebras.
///
///   su(p,q)       A_{p+q-1}, 0 <= p <= q
///   sl_r(n)       sl(n,R), A_{n-1}, n >= 2
///   sl_h(m)       sl(m,H), A_{2m-1}, m >= 1
///   so(p,q)       B or D, p <= q, p+q odd >= 5 or even >= 8
///   so_star(2n)   so*(2n), D_n, n >= 4
///   sp_r(n)       sp(n,R), C_n, n >= 2
///   sp(p,q)       C_{p+q}, 0 <= p <= q, p+q >= 2
///   compact(T,l)  all nodes black
///   complex(T,l)  two copies of T_l joined node-by-node by arrows
///   exc(LABEL)    exceptional forms: EI..EIX, FI, FII, G
///
/// Every diagram returned has passed build_conjugation.
SatakeDiagram catalog_lookup(std::string_view name, const std::vector<std::string>& args);

struct CatalogEntry {
  std::string family;
  std::string params;  // "1;3", "A;2", "EII"
  int rank;            // rank of the simple type (l for complex forms)
  SatakeDiagram diagram;
};

const std::vector<std::string>& catalog_families();

/// Forms of one family with rank <= rank_max, in parameter order. For the
/// parametric families only noncompact members are listed (p >= 1).
std::vector<CatalogEntry> catalog_family(std::string_view family, int rank_max);

/// All families, sorted by display name.
std::vector<CatalogEntry> catalog_forms(int rank_max);

/// Plain-text table of the exceptional forms, one record per line:
///   LABEL TYPE RANK black {..} arrows {(i,j),..}
std::string_view exceptional_table();

}  // namespace crflag
