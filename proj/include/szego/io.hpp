#pragma once

// File formats. JSON via nlohmann/json; every writer emits LF line endings
// and 17 significant digits so runs are byte-reproducible.

#include <string>
#include <vector>

#include "szego/free_semigroup.hpp"
#include "szego/gamma_field.hpp"
#include "szego/kernel.hpp"
#include "szego/ortho_poly.hpp"
#include "szego/schur.hpp"

namespace szego::io {

/// {"size": M, "entries": [[k, j, re, im], ...]} with k <= j, every pair
/// present exactly once.
MomentKernel kernel_from_json(const std::string& text);
std::string kernel_to_json(const MomentKernel& k);

/// {"diag": [...], "gamma": [[k, j, re, im], ...]}, every k < j present.
GammaField gamma_from_json(const std::string& text);
std::string gamma_to_json(const GammaField& g);
/// Float field plus an "exact" array of [k, j, sign, "p/q"] (gamma squared).
std::string gamma_to_json(const SquaredGammaField& g);

/// {"N": 2, "gamma": [["1", re, im], ...]}; absent words have gamma = 0.
TreeGammaField tree_from_json(const std::string& text, Index depth);

/// CSV (n, l, k, re, im) for degrees 0..max_degree on levels 0..max_level.
std::string poly_csv(const PolyTable& t, bool reversed);
/// "n=2 l=0: 6.708*x^2 - ..." style lines.
std::string poly_human(const PolyTable& t, bool reversed);

std::string lattice_text(const std::vector<LatticeTerm>& terms);

/// %.17g
std::string num(double v);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace szego::io
