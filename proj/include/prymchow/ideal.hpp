#ifndef PRYMCHOW_IDEAL_HPP
#define PRYMCHOW_IDEAL_HPP

// Membership and equality for homogeneous ideals of Z[vars].
//
// For a homogeneous query p of degree d, p lies in (g_1, ..., g_k) iff p is an
// integer combination of the products m*g_i with m a monomial of degree
// d - deg(g_i). That is a finite lattice problem in the degree-d monomial
// basis, decided with an echelon lattice per degree.

#include "prymchow/hermite.hpp"
#include "prymchow/polyring.hpp"

#include <bitset>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace prymchow {

/// Witness for p in (gens): p == sum of multiplier * gens[generator].
struct MembershipCertificate
{
	struct Combiner
	{
		std::size_t generator;
		IntPoly multiplier;
	};
	std::vector<Combiner> combiners;

	IntPoly replay(std::vector<IntPoly> const &gens) const
	{
		IntPoly sum;
		for (auto const &c : combiners)
			sum += c.multiplier * gens.at(c.generator);
		return sum;
	}

	std::string to_string(std::vector<IntPoly> const &gens) const
	{
		if (combiners.empty())
			return "0";
		std::string out;
		for (auto const &c : combiners)
		{
			if (!out.empty())
				out += " + ";
			out += "(" + c.multiplier.to_string() + ")*[" + gens.at(c.generator).to_string() + "]";
		}
		return out;
	}
};

class HomogeneousIdeal
{
  public:
	explicit HomogeneousIdeal(std::vector<IntPoly> gens) : gens_(std::move(gens))
	{
		for (auto const &g : gens_)
		{
			if (!g.is_homogeneous())
				throw std::invalid_argument("ideal generator " + g.to_string() + " is not homogeneous");
			support_ |= support_of(g);
		}
	}

	std::vector<IntPoly> const &generators() const { return gens_; }

	/// Certificate if p is in the ideal, nullopt otherwise. Throws on
	/// inhomogeneous p.
	std::optional<MembershipCertificate> member(IntPoly const &p) const
	{
		if (!p.is_homogeneous())
			throw std::invalid_argument("membership query " + p.to_string() + " is not homogeneous");
		if (p.is_zero())
			return MembershipCertificate{};
		int d = *p.degree();
		auto const &slice = degree_slice(d, support_ | support_of(p));
		auto combo = slice.lattice.solve(slice.coordinates(p));
		if (!combo)
			return std::nullopt;
		std::map<std::size_t, IntPoly> per_gen;
		for (std::size_t k = 0; k < combo->size(); ++k)
		{
			Integer const &c = (*combo)[k];
			if (c == 0)
				continue;
			auto const &[gen, mono] = slice.columns[k];
			per_gen[gen].add_term(mono, c);
		}
		MembershipCertificate cert;
		for (auto &[gen, mult] : per_gen)
			if (!mult.is_zero())
				cert.combiners.push_back({gen, std::move(mult)});
		return cert;
	}

	bool contains(IntPoly const &p) const { return member(p).has_value(); }

	/// a == b modulo the ideal, compared one homogeneous degree at a time.
	bool equal_mod(IntPoly const &a, IntPoly const &b) const
	{
		for (auto const &[d, piece] : (a - b).components())
			if (!contains(piece))
				return false;
		return true;
	}

  private:
	using VarSet = std::bitset<kVarCount>;

	struct DegreeSlice
	{
		std::vector<Monomial> basis;
		std::map<Monomial, std::size_t, GradedLexGreater> position;
		std::vector<std::pair<std::size_t, Monomial>> columns; // (generator, multiplier)
		EchelonLattice<Integer> lattice{0};

		EchelonLattice<Integer>::Vector coordinates(IntPoly const &p) const
		{
			EchelonLattice<Integer>::Vector v(basis.size());
			for (auto const &[m, c] : p.terms())
				v[position.at(m)] = c;
			return v;
		}
	};

	std::vector<IntPoly> gens_;
	VarSet support_;
	// Degree slices are built lazily; copies of the ideal share them.
	struct SliceCache
	{
		std::mutex mutex;
		std::map<std::pair<int, unsigned long>, std::unique_ptr<DegreeSlice>> slices;
	};
	std::shared_ptr<SliceCache> cache_ = std::make_shared<SliceCache>();

	static VarSet support_of(IntPoly const &p)
	{
		VarSet s;
		for (auto const &[m, c] : p.terms())
			for (Var v : kAllVars)
				if (m[v] > 0)
					s.set(index_of(v));
		return s;
	}

	DegreeSlice const &degree_slice(int d, VarSet vars) const
	{
		std::lock_guard lock(cache_->mutex);
		auto key = std::make_pair(d, vars.to_ulong());
		auto &slot = cache_->slices[key];
		if (slot)
			return *slot;
		std::vector<Var> var_list;
		for (Var v : kAllVars)
			if (vars.test(index_of(v)))
			{
				if (var_degree(v) <= 0)
					throw std::invalid_argument("ideal membership needs positively graded variables");
				var_list.push_back(v);
			}
		auto slice = std::make_unique<DegreeSlice>();
		slice->basis = monomials_of_degree(d, var_list);
		for (std::size_t i = 0; i < slice->basis.size(); ++i)
			slice->position.emplace(slice->basis[i], i);
		slice->lattice = EchelonLattice<Integer>(slice->basis.size());
		for (std::size_t gi = 0; gi < gens_.size(); ++gi)
		{
			auto const &g = gens_[gi];
			if (g.is_zero() || *g.degree() > d)
				continue;
			for (auto const &m : monomials_of_degree(d - *g.degree(), var_list))
			{
				slice->columns.emplace_back(gi, m);
				slice->lattice.insert(slice->coordinates(IntPoly::term(Integer(1), m) * g));
			}
		}
		slot = std::move(slice);
		return *slot;
	}
};

inline std::optional<MembershipCertificate> ideal_member(IntPoly const &p, std::vector<IntPoly> const &gens)
{
	return HomogeneousIdeal(gens).member(p);
}

/// Outcome of a two-way generator comparison. `a_in_b[i]` certifies the i-th
/// generator of A inside (B); a missing certificate marks a failed direction.
struct IdealComparison
{
	std::vector<std::optional<MembershipCertificate>> a_in_b;
	std::vector<std::optional<MembershipCertificate>> b_in_a;

	bool equal() const
	{
		auto all = [](auto const &v) {
			for (auto const &c : v)
				if (!c)
					return false;
			return true;
		};
		return all(a_in_b) && all(b_in_a);
	}
};

inline IdealComparison compare_ideals(HomogeneousIdeal const &a, HomogeneousIdeal const &b)
{
	IdealComparison out;
	for (auto const &g : a.generators())
		out.a_in_b.push_back(b.member(g));
	for (auto const &g : b.generators())
		out.b_in_a.push_back(a.member(g));
	return out;
}

inline IdealComparison ideal_equal(std::vector<IntPoly> const &a, std::vector<IntPoly> const &b)
{
	return compare_ideals(HomogeneousIdeal(a), HomogeneousIdeal(b));
}

inline bool equal_mod(IntPoly const &a, IntPoly const &b, std::vector<IntPoly> const &gens)
{
	return HomogeneousIdeal(gens).equal_mod(a, b);
}

} // namespace prymchow

#endif
