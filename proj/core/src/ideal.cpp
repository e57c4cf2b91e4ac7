#include "pslab/ideal.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "pslab/parallel.hpp"

namespace pslab {

namespace {

SparseRow coordinates(const GradedPolynomial& p, const MonomialBasis& basis) {
  SparseRow row;
  row.reserve(p.terms().size());
  for (const auto& [m, c] : p.terms()) {
    const int col = basis.find(m);
    if (col < 0) throw std::logic_error("coordinates: monomial escapes the bigrade basis");
    row.emplace_back(col, c);
  }
  return normalize_row(std::move(row));
}

SparseRow tensor_coordinates(const TensorVector& v, const TensorBasis& basis) {
  SparseRow row;
  row.reserve(v.terms().size());
  for (const auto& [key, c] : v.terms()) {
    const int idx = basis.find(key);
    if (idx < 0) throw std::logic_error("tensor_coordinates: vector escapes the graded basis");
    row.emplace_back(idx, c);
  }
  return normalize_row(std::move(row));
}

std::vector<std::pair<int, int>> bigrades(int max_weight, int max_charge, int min_part = 1) {
  std::vector<std::pair<int, int>> out;
  for (int n = 0; n <= max_weight; ++n) {
    for (int c = 0; c * min_part <= n; ++c) {
      if (max_charge >= 0 && c > max_charge) break;
      out.emplace_back(n, c);
    }
  }
  return out;
}

/// Span of the monomials divisible by x(-1)^power inside one bigrade: the
/// coordinate subspace corresponding to monomials with at least `power` parts
/// equal to 1.
Subspace one_power_piece(const MonomialBasis& basis, int power) {
  std::vector<SparseRow> rows;
  for (int i = 0; i < basis.size(); ++i) {
    const auto& parts = basis.monomials[static_cast<size_t>(i)].parts();
    int ones = 0;
    for (auto it = parts.rbegin(); it != parts.rend() && *it == 1; ++it) ++ones;
    if (ones >= power) rows.push_back({{i, Rational(1)}});
  }
  return rref_rows(std::move(rows), basis.size());
}

std::string first_difference_witness(const Subspace& ideal, const Subspace& kern,
                                     const MonomialBasis& basis) {
  for (int r = 0; r < kern.dim(); ++r) {
    if (!ideal.contains(kern.rows()[static_cast<size_t>(r)])) {
      return "kernel element not in ideal: " + row_polynomial(kern, r, basis).str();
    }
  }
  for (int r = 0; r < ideal.dim(); ++r) {
    if (!kern.contains(ideal.rows()[static_cast<size_t>(r)])) {
      return "ideal element not in kernel: " + row_polynomial(ideal, r, basis).str();
    }
  }
  return "";
}

}  // namespace

Subspace ideal_piece(int level, int index, int weight, int charge, bool primed) {
  if (level < 1) throw std::invalid_argument("ideal_piece: level must be >= 1");
  if (index < 0 || index > level) throw std::invalid_argument("ideal_piece: index out of range");
  if (primed && index != level) {
    throw std::invalid_argument("ideal_piece: primed ideal exists only at index == level");
  }
  const int min_part = primed ? 2 : 1;
  const MonomialBasis basis = MonomialBasis::bigrade(weight, charge, min_part);
  std::vector<SparseRow> rows;
  const int variant = primed ? 1 : 0;
  const int t_min = (primed ? 2 : 1) * (level + 1);
  for (int t = t_min; t <= weight; ++t) {
    const int cofactor_weight = weight - t;
    const int cofactor_charge = charge - (level + 1);
    if (cofactor_weight < 0 || cofactor_charge < 0) continue;
    const GradedPolynomial relation = relation_generator(level, t, variant);
    for (const Monomial& m : enumerate_monomials(cofactor_weight, cofactor_charge, min_part)) {
      rows.push_back(coordinates(GradedPolynomial(m) * relation, basis));
    }
  }
  if (!primed) {
    const int power = level - index + 1;
    const int cofactor_weight = weight - power;
    const int cofactor_charge = charge - power;
    if (cofactor_weight >= 0 && cofactor_charge >= 0) {
      const Monomial ones = Monomial::power(1, power);
      for (const Monomial& m : enumerate_monomials(cofactor_weight, cofactor_charge, 1)) {
        rows.push_back(coordinates(GradedPolynomial(m.times(ones)), basis));
      }
    }
  }
  return rref_rows(std::move(rows), basis.size());
}

Subspace kernel_piece(const ModuleConfig& cfg, int weight, int charge, Evaluator* ev,
                      int min_part) {
  std::unique_ptr<Evaluator> local;
  if (!ev) {
    local = std::make_unique<Evaluator>(cfg);
    ev = local.get();
  }
  const MonomialBasis basis = MonomialBasis::bigrade(weight, charge, min_part);
  const TensorBasis target = graded_basis(cfg, weight, charge);
  std::vector<SparseRow> columns;
  columns.reserve(static_cast<size_t>(basis.size()));
  for (const Monomial& m : basis.monomials) {
    columns.push_back(tensor_coordinates(ev->monomial_image(m), target));
  }
  return kernel_of_columns(columns, target.size());
}

GradedPolynomial row_polynomial(const Subspace& s, int row, const MonomialBasis& basis) {
  GradedPolynomial p;
  for (const auto& [col, val] : s.rows()[static_cast<size_t>(row)]) {
    p.add_term(basis.monomials[static_cast<size_t>(col)], val);
  }
  return p;
}

std::vector<GradedPieceReport> verify_presentation(int level, int index, int max_weight,
                                                   int max_charge, int jobs) {
  const ModuleConfig cfg(level, index);
  Evaluator ev(cfg);
  const auto grades = bigrades(max_weight, max_charge);
  std::vector<GradedPieceReport> reports(grades.size());
  parallel_for(grades.size(), jobs, [&](size_t g) {
    const auto [n, c] = grades[g];
    const MonomialBasis basis = MonomialBasis::bigrade(n, c, 1);
    const Subspace ideal = ideal_piece(level, index, n, c);
    const Subspace kern = kernel_piece(cfg, n, c, &ev);
    GradedPieceReport& row = reports[g];
    row.level = level;
    row.index = index;
    row.weight = n;
    row.charge = c;
    row.dim_monomials = basis.size();
    row.dim_ideal = ideal.dim();
    row.dim_kernel = kern.dim();
    row.ideal_in_kernel = is_subspace(ideal, kern);
    row.kernel_in_ideal = is_subspace(kern, ideal);
    row.equal = row.ideal_in_kernel && row.kernel_in_ideal;
    if (!row.equal) row.witness = first_difference_witness(ideal, kern, basis);
  });
  return reports;
}

std::vector<GradedPieceReport> verify_presentation_primed(int level, int max_weight,
                                                          int max_charge, int jobs) {
  const ModuleConfig cfg(level, level);
  Evaluator ev(cfg);
  const auto grades = bigrades(max_weight, max_charge, 2);
  std::vector<GradedPieceReport> reports(grades.size());
  parallel_for(grades.size(), jobs, [&](size_t g) {
    const auto [n, c] = grades[g];
    const MonomialBasis basis = MonomialBasis::bigrade(n, c, 2);
    const Subspace ideal = ideal_piece(level, level, n, c, /*primed=*/true);
    const Subspace kern = kernel_piece(cfg, n, c, &ev, /*min_part=*/2);
    GradedPieceReport& row = reports[g];
    row.level = level;
    row.index = level;
    row.weight = n;
    row.charge = c;
    row.dim_monomials = basis.size();
    row.dim_ideal = ideal.dim();
    row.dim_kernel = kern.dim();
    row.ideal_in_kernel = is_subspace(ideal, kern);
    row.kernel_in_ideal = is_subspace(kern, ideal);
    row.equal = row.ideal_in_kernel && row.kernel_in_ideal;
    if (!row.equal) row.witness = first_difference_witness(ideal, kern, basis);
  });
  return reports;
}

std::vector<CheckRow> verify_remark_22(int level, int max_weight, int jobs) {
  const auto grades = bigrades(max_weight, -1);
  std::vector<std::vector<CheckRow>> slots(grades.size());
  parallel_for(grades.size(), jobs, [&](size_t g) {
    const auto [n, c] = grades[g];
    const MonomialBasis basis = MonomialBasis::bigrade(n, c, 1);
    std::vector<Subspace> pieces;
    pieces.reserve(static_cast<size_t>(level) + 1);
    for (int i = 0; i <= level; ++i) pieces.push_back(ideal_piece(level, i, n, c));
    auto& rows = slots[g];

    {
      bool pass = true;
      std::string detail;
      for (int i = 0; i < level && pass; ++i) {
        if (!is_subspace(pieces[static_cast<size_t>(i)], pieces[static_cast<size_t>(i) + 1])) {
          pass = false;
          detail = "inclusion fails at index " + std::to_string(i);
        }
      }
      rows.push_back({"remark22.chain", level, -1, n, c, pass, detail});
    }
    {
      bool pass = true;
      std::string detail;
      for (int i = 0; i <= level && pass; ++i) {
        const Subspace two_term =
            sum(pieces[0], one_power_piece(basis, level - i + 1));
        if (!equal(pieces[static_cast<size_t>(i)], two_term)) {
          pass = false;
          detail = "two-term description fails at index " + std::to_string(i);
        }
      }
      rows.push_back({"remark22.two_term", level, -1, n, c, pass, detail});
    }
    {
      const MonomialBasis basis2 = MonomialBasis::bigrade(n, c, 2);
      const Subspace primed = ideal_piece(level, level, n, c, /*primed=*/true);
      std::vector<SparseRow> image_rows;
      for (int r = 0; r < pieces[static_cast<size_t>(level)].dim(); ++r) {
        const GradedPolynomial projected =
            rho(row_polynomial(pieces[static_cast<size_t>(level)], r, basis));
        image_rows.push_back(coordinates(projected, basis2));
      }
      const Subspace image = rref_rows(std::move(image_rows), basis2.size());
      const bool pass = equal(image, primed);
      rows.push_back({"remark22.rho_image", level, -1, n, c, pass,
                      pass ? "" : "projection image differs from primed piece"});

      // Direct sum: embed the primed piece into the full coordinates.
      std::vector<int> column_map(static_cast<size_t>(basis2.size()));
      for (int j = 0; j < basis2.size(); ++j) {
        column_map[static_cast<size_t>(j)] = basis.find(basis2.monomials[static_cast<size_t>(j)]);
      }
      const Subspace primed_embedded = remap_columns(primed, column_map, basis.size());
      const Subspace ones_piece = one_power_piece(basis, 1);
      const bool sum_equal =
          equal(pieces[static_cast<size_t>(level)], sum(primed_embedded, ones_piece));
      const bool dims_add = pieces[static_cast<size_t>(level)].dim() ==
                            primed_embedded.dim() + ones_piece.dim();
      rows.push_back({"remark22.direct_sum", level, -1, n, c, sum_equal && dims_add,
                      sum_equal && dims_add ? "" : "decomposition fails"});
    }
  });
  std::vector<CheckRow> out;
  for (auto& rows : slots) out.insert(out.end(), rows.begin(), rows.end());
  return out;
}

std::vector<CheckRow> verify_lifting_lemma(int level, int index, int max_weight, int jobs) {
  const auto grades = bigrades(max_weight, -1);
  std::vector<CheckRow> out;
  std::vector<CheckRow> slots(grades.size());
  parallel_for(grades.size(), jobs, [&](size_t g) {
    const auto [n, c] = grades[g];
    const MonomialBasis basis = MonomialBasis::bigrade(n, c, 1);
    const Subspace source = ideal_piece(level, index, n, c);
    CheckRow row{"lifting.inclusion", level, index, n, c, true, ""};
    if (source.dim() > 0) {
      const int target_weight = n + c + index;
      const int target_charge = c + index;
      const MonomialBasis target_basis = MonomialBasis::bigrade(target_weight, target_charge, 1);
      const Subspace target = ideal_piece(level, level - index, target_weight, target_charge);
      const GradedPolynomial ones = xalpha_power(index);
      for (int r = 0; r < source.dim() && row.pass; ++r) {
        const GradedPolynomial shifted =
            tau_power(row_polynomial(source, r, basis), 1) * ones;
        if (!target.contains(coordinates(shifted, target_basis))) {
          row.pass = false;
          row.detail = "lifted element escapes target ideal piece: " + shifted.str();
        }
      }
    }
    slots[g] = row;
  });
  out = std::move(slots);

  // Supporting multinomial fact about the relation of weight 2*level-index+2.
  {
    const int t = 2 * level - index + 2;
    const GradedPolynomial relation = relation_generator(level, t, 0);
    std::vector<int> special_parts(static_cast<size_t>(level - index + 1), 2);
    special_parts.insert(special_parts.end(), static_cast<size_t>(index), 1);
    const Monomial special(special_parts);
    const Rational expected(factorial(static_cast<unsigned long>(level + 1)) /
                            (factorial(static_cast<unsigned long>(level - index + 1)) *
                             factorial(static_cast<unsigned long>(index))));
    bool pass = relation.coeff(special) == expected;
    std::string detail;
    if (!pass) detail = "coefficient mismatch";
    for (const auto& [m, coeff] : relation.terms()) {
      int ones = 0;
      for (auto it = m.parts().rbegin(); it != m.parts().rend() && *it == 1; ++it) ++ones;
      if (ones < index || (ones == index && m != special)) {
        pass = false;
        detail = "unexpected low-ones term " + m.str();
        break;
      }
    }
    out.push_back({"lifting.multinomial", level, index, t, level + 1, pass, detail});
  }
  return out;
}

std::vector<CheckRow> verify_tau_lemma(int level, int max_weight, int jobs) {
  const auto grades = bigrades(max_weight, -1);
  std::vector<CheckRow> slots(grades.size());
  parallel_for(grades.size(), jobs, [&](size_t g) {
    const auto [n, c] = grades[g];
    const MonomialBasis basis = MonomialBasis::bigrade(n, c, 1);
    const Subspace source = ideal_piece(level, 0, n, c);
    CheckRow row{"tau.inclusion", level, 0, n, c, true, ""};
    if (source.dim() > 0) {
      const MonomialBasis target_basis = MonomialBasis::bigrade(n + c, c, 1);
      const Subspace target = ideal_piece(level, level, n + c, c);
      for (int r = 0; r < source.dim() && row.pass; ++r) {
        const GradedPolynomial shifted = tau_power(row_polynomial(source, r, basis), 1);
        if (!target.contains(coordinates(shifted, target_basis))) {
          row.pass = false;
          row.detail = "shifted element escapes index-level ideal: " + shifted.str();
        }
      }
    }
    slots[g] = row;
  });
  return slots;
}

std::vector<CheckRow> verify_kernel_chain(int level, int max_weight, int jobs) {
  std::vector<std::unique_ptr<Evaluator>> evaluators;
  std::vector<ModuleConfig> configs;
  for (int i = 0; i <= level; ++i) {
    configs.emplace_back(level, i);
    evaluators.push_back(std::make_unique<Evaluator>(configs.back()));
  }
  const auto grades = bigrades(max_weight, -1);
  std::vector<CheckRow> slots(grades.size());
  parallel_for(grades.size(), jobs, [&](size_t g) {
    const auto [n, c] = grades[g];
    CheckRow row{"kernel.chain", level, -1, n, c, true, ""};
    Subspace prev = kernel_piece(configs[0], n, c, evaluators[0].get());
    for (int i = 1; i <= level && row.pass; ++i) {
      Subspace next = kernel_piece(configs[static_cast<size_t>(i)], n, c,
                                   evaluators[static_cast<size_t>(i)].get());
      if (!is_subspace(prev, next)) {
        row.pass = false;
        row.detail = "kernel inclusion fails between indices " + std::to_string(i - 1) +
                     " and " + std::to_string(i);
      }
      prev = std::move(next);
    }
    slots[g] = row;
  });
  return slots;
}

std::vector<CheckRow> verify_annihilation(int level, int max_t) {
  std::vector<CheckRow> out;
  for (int i = 0; i <= level; ++i) {
    const ModuleConfig cfg(level, i);
    Evaluator ev(cfg);
    for (int t = level + 1; t <= max_t; ++t) {
      const bool pass = ev.evaluate(relation_generator(level, t, 0)).is_zero();
      out.push_back({"annihilation.relation", level, i, t, level + 1, pass,
                     pass ? "" : "relation does not annihilate the highest weight vector"});
    }
    const int power = level - i + 1;
    const bool pass = ev.evaluate(xalpha_power(power)).is_zero();
    out.push_back({"annihilation.power", level, i, power, power, pass,
                   pass ? "" : "x(-1) power does not annihilate the highest weight vector"});
  }
  return out;
}

std::vector<CheckRow> verify_charge_bound(int level, int max_weight, int jobs) {
  const ModuleConfig cfg(level, 0);
  Evaluator ev(cfg);
  std::vector<std::pair<int, int>> grades;
  for (int n = 0; n <= max_weight; ++n) {
    for (int c = 0; c <= std::min(n, level + 1); ++c) grades.emplace_back(n, c);
  }
  std::vector<CheckRow> slots(grades.size());
  parallel_for(grades.size(), jobs, [&](size_t g) {
    const auto [n, c] = grades[g];
    const Subspace kern = kernel_piece(cfg, n, c, &ev);
    bool pass;
    std::string detail;
    if (c <= level) {
      pass = kern.dim() == 0;
      if (!pass) detail = "kernel piece of charge <= level is nonzero";
    } else {
      pass = kern.dim() <= 1;
      if (!pass) detail = "charge level+1 kernel piece has dimension > 1";
    }
    slots[g] = CheckRow{"charge_bound", level, 0, n, c, pass, detail};
  });
  return slots;
}

}  // namespace pslab
