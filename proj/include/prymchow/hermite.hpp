#ifndef PRYMCHOW_HERMITE_HPP
#define PRYMCHOW_HERMITE_HPP

// Integer lattices in echelon (Hermite) form with provenance tracking.
//
// Each stored row remembers how it was obtained as an integer combination of
// the vectors handed to insert(), so that a successful reduction yields an
// explicit witness.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace prymchow {

template <class Int>
class EchelonLattice
{
  public:
	using Vector = std::vector<Int>;

	struct Row
	{
		Vector values;
		Vector combo; // coefficients on the inserted generators
	};

	explicit EchelonLattice(std::size_t dimension) : dim_(dimension) {}

	std::size_t dimension() const { return dim_; }
	std::size_t generator_count() const { return generators_; }
	std::size_t rank() const { return rows_.size(); }

	/// Adds a generator; returns its index for use in combos.
	std::size_t insert(Vector v)
	{
		if (v.size() != dim_)
			throw std::invalid_argument("lattice vector has wrong dimension");
		std::size_t id = generators_++;
		for (auto &[col, row] : rows_)
			row.combo.resize(generators_);
		Vector combo(generators_);
		combo[id] = 1;
		absorb(std::move(v), std::move(combo));
		return id;
	}

	/// Combination of generators equal to `target`, or nullopt if `target` is
	/// not in the lattice.
	std::optional<Vector> solve(Vector target) const
	{
		if (target.size() != dim_)
			throw std::invalid_argument("target vector has wrong dimension");
		Vector combo(generators_);
		for (auto const &[col, row] : rows_)
		{
			if (target[col] == 0)
				continue;
			Int const &pivot = row.values[col];
			if (target[col] % pivot != 0)
				return std::nullopt;
			Int q = target[col] / pivot;
			for (std::size_t j = col; j < dim_; ++j)
				target[j] -= q * row.values[j];
			for (std::size_t k = 0; k < generators_; ++k)
				combo[k] += q * row.combo[k];
		}
		for (auto const &x : target)
			if (x != 0)
				return std::nullopt;
		return combo;
	}

	bool contains(Vector const &target) const { return solve(target).has_value(); }

	/// Hermite normal form: positive pivots, entries above each pivot reduced
	/// into [0, pivot). Rows are ordered by pivot column.
	std::vector<Vector> hermite_form() const
	{
		std::vector<std::pair<std::size_t, Vector>> rows;
		for (auto const &[col, row] : rows_)
		{
			Vector v = row.values;
			if (v[col] < 0)
				for (auto &x : v)
					x = -x;
			rows.emplace_back(col, std::move(v));
		}
		for (std::size_t i = 0; i < rows.size(); ++i)
		{
			auto const &[col, pivot_row] = rows[i];
			Int const pivot = pivot_row[col];
			for (std::size_t k = 0; k < i; ++k)
			{
				Vector &above = rows[k].second;
				Int q = floor_div(above[col], pivot);
				if (q != 0)
					for (std::size_t j = col; j < dim_; ++j)
						above[j] -= q * pivot_row[j];
			}
		}
		std::vector<Vector> out;
		for (auto &[col, v] : rows)
			out.push_back(std::move(v));
		return out;
	}

	std::map<std::size_t, Row> const &rows() const { return rows_; }

  private:
	std::size_t dim_;
	std::size_t generators_ = 0;
	std::map<std::size_t, Row> rows_; // keyed by pivot column

	static Int floor_div(Int const &a, Int const &b)
	{
		Int q = a / b; // truncates toward zero
		if ((a % b != 0) && ((a < 0) != (b < 0)))
			q -= 1;
		return q;
	}

	// Extended gcd: returns (g, s, t) with s*a + t*b = g.
	static std::tuple<Int, Int, Int> xgcd(Int a, Int b)
	{
		Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
		while (b != 0)
		{
			Int q = a / b;
			Int r = a - q * b;
			a = b;
			b = r;
			Int s2 = s0 - q * s1;
			s0 = s1;
			s1 = s2;
			Int t2 = t0 - q * t1;
			t0 = t1;
			t1 = t2;
		}
		return {a, s0, t0};
	}

	void absorb(Vector v, Vector combo)
	{
		std::size_t col = 0;
		while (true)
		{
			while (col < dim_ && v[col] == 0)
				++col;
			if (col == dim_)
				return;
			auto it = rows_.find(col);
			if (it == rows_.end())
			{
				rows_.emplace(col, Row{std::move(v), std::move(combo)});
				return;
			}
			Row &row = it->second;
			Int a = row.values[col], b = v[col];
			auto [g, s, t] = xgcd(a, b);
			Int ua = a / g, ub = b / g;
			// [s t; -ub ua] is unimodular; the first combination becomes the new
			// pivot row, the second vanishes in this column.
			Vector new_values(dim_), rest_values(dim_);
			for (std::size_t j = col; j < dim_; ++j)
			{
				new_values[j] = s * row.values[j] + t * v[j];
				rest_values[j] = ua * v[j] - ub * row.values[j];
			}
			Vector new_combo(generators_), rest_combo(generators_);
			for (std::size_t k = 0; k < generators_; ++k)
			{
				new_combo[k] = s * row.combo[k] + t * combo[k];
				rest_combo[k] = ua * combo[k] - ub * row.combo[k];
			}
			row.values = std::move(new_values);
			row.combo = std::move(new_combo);
			v = std::move(rest_values);
			combo = std::move(rest_combo);
			++col;
		}
	}
};

} // namespace prymchow

#endif
