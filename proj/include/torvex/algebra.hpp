#pragma once

#include "torvex/linear.hpp"

#include <map>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace torvex {

enum class Parity : int { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b)
{
    return Parity((int(a) + int(b)) % 2);
}

struct Root {
    std::string name;        // token used in table files
    std::vector<int> coords; // simple-root basis, length = rank
    Parity parity = Parity::even;
    int sigma = 1; // -1 exactly on negative odd roots

    // Derived at load time.
    std::vector<Rat> alpha_h; // alpha(H(i))
    std::vector<Rat> coroot;  // H(alpha) in the H(i) basis
    Rat norm = 0;             // (alpha, alpha)
};

// A Chevalley-basis symbol: H(i) or X(alpha).
struct BasisSymbol {
    enum Kind { cartan = 0, rootvec = 1 };
    int kind = cartan;
    int index = 0; // Cartan index 1..l, or root index into AlgebraTable::roots
    auto operator<=>(const BasisSymbol&) const = default;
};

using AlgebraElement = LinComb<BasisSymbol>;

struct Violation {
    std::string identity;
    std::string witness;
};

struct Report {
    std::string suite;
    long long checked = 0;
    std::vector<Violation> violations;
    bool passed() const { return violations.empty(); }
    void fail(std::string identity, std::string witness)
    {
        violations.push_back({std::move(identity), std::move(witness)});
    }
    void merge(const Report& o)
    {
        checked += o.checked;
        violations.insert(violations.end(), o.violations.begin(), o.violations.end());
    }
};

class AlgebraTable {
  public:
    std::string name;
    int rank = 0;
    std::vector<Root> roots;

    const Root& root(int i) const { return roots.at(std::size_t(i)); }
    std::optional<int> find_root(const std::vector<int>& coords) const;
    std::optional<int> find_root_by_name(const std::string& n) const;
    int negative_of(int root_index) const; // index of -alpha, -1 if absent

    std::vector<BasisSymbol> basis() const;
    Parity parity(const BasisSymbol& s) const;
    std::string symbol_name(const BasisSymbol& s) const;
    std::string element_string(const AlgebraElement& e) const;

    bool root_is_positive(int root_index) const; // first nonzero coord > 0

    // Raw structure constants. Missing pairs are zero.
    const AlgebraElement& bracket_entry(const BasisSymbol& a, const BasisSymbol& b) const;
    Rat form_entry(const BasisSymbol& a, const BasisSymbol& b) const;

    void set_bracket(const BasisSymbol& a, const BasisSymbol& b, AlgebraElement v);
    void set_form(const BasisSymbol& a, const BasisSymbol& b, const Rat& v);

    // Fills in missing bracket/form orientations by (super)symmetry and
    // computes per-root derived data (alpha(H(i)), coroots, norms). Throws on
    // inconsistent input.
    void finalize();

  private:
    std::map<std::pair<BasisSymbol, BasisSymbol>, AlgebraElement> brackets_;
    std::map<std::pair<BasisSymbol, BasisSymbol>, Rat> form_;
};

// Bilinear extension of the table bracket / form.
AlgebraElement bracket(const AlgebraTable& t, const AlgebraElement& x, const AlgebraElement& y);
Rat invariant_form(const AlgebraTable& t, const AlgebraElement& x, const AlgebraElement& y);

// Parity of a homogeneous element; nullopt for 0 or mixed-parity support.
std::optional<Parity> homogeneous_parity(const AlgebraTable& t, const AlgebraElement& e);

// Exhaustive check of every axiom over all basis pairs/triples.
Report verify_algebra(const AlgebraTable& t);

// Plain-text table format; see data/*.alg. Throws std::runtime_error with the
// first violated constraint on malformed input.
AlgebraTable parse_algebra_table(std::istream& in);
AlgebraTable parse_algebra_table(const std::string& text);

// Shipped names: sl2, sl3, osp12. Anything else is tried as a file path.
AlgebraTable load_algebra(const std::string& name);
std::vector<std::string> builtin_algebra_names();

} // namespace torvex
