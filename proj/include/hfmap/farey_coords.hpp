#pragma once

// Hecke-Farey coordinates modulo n.
//
// Kind A is the cusp a/(c sqrt m), kind B is b sqrt(m)/d. For q = 3 only kind A
// exists and denotes the plain fraction a/c. A coordinate is stored as the
// lexicographically smaller of (num, den) and (-num, -den) mod n, so equal
// cusps compare structurally equal.

#include "hfmap/hecke_group.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hfmap {

enum class Kind : std::uint8_t { A, B };

struct HFCoord {
    Kind kind = Kind::A;
    Residue num = 0;
    Residue den = 0;

    friend bool operator==(const HFCoord&, const HFCoord&) = default;
    friend auto operator<=>(const HFCoord&, const HFCoord&) = default;
};

// Raw text form "A:num/den" / "B:num/den".
std::string to_string(const HFCoord& u);
// Parses the raw form; the result is normalized.
HFCoord parse_coord(std::string_view text, const HeckeParams& p);

// Throws InvalidArgument if gcd(a, c, n) != 1, or for kind B when q = 3.
HFCoord normalize(Kind kind, std::int64_t a, std::int64_t c, const HeckeParams& p);

// All coordinates sorted by (kind, num, den). Rejects even n.
std::vector<HFCoord> enumerate_coords(const HeckeParams& p);

// q = 4, 6: opposite kinds and a*d - m*b*c = +-1 with A = (a, c), B = (b, d).
// q = 3: a*d - b*c = +-1.
bool adjacent(const HFCoord& u, const HFCoord& v, const HeckeParams& p);

// Image of infinity under g: the first column read as a coordinate.
HFCoord cusp_of(const ProjMatrix& g, const HeckeParams& p);

// Moebius action of g on the homogeneous column of u.
HFCoord apply(const ProjMatrix& g, const HFCoord& u, const HeckeParams& p);

inline bool is_pole(const HFCoord& u) { return u.den == 0; }
std::vector<HFCoord> poles(const HeckeParams& p);

// Display labels for the coordinates of M_4(5) (A1 ... L2) and M_4(3).
class NameTable {
public:
    struct Entry {
        std::string name;
        HFCoord printed; // as listed, not normalized
        HFCoord coord;   // normalized
    };

    // Builds the table from (name, kind, num, den) rows; throws
    // VerificationError unless the rows are a bijection onto distinct coordinates.
    NameTable(HeckeParams p, const std::vector<Entry>& rows);

    const HeckeParams& params() const { return params_; }
    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    std::optional<HFCoord> find(std::string_view name) const;
    std::optional<std::string> name_of(const HFCoord& u) const;
    // Name if known, raw form otherwise.
    std::string label(const HFCoord& u) const;

    // A table name or a raw "kind:num/den" coordinate.
    HFCoord resolve(std::string_view token) const;

private:
    HeckeParams params_;
    std::vector<Entry> entries_;
};

// Names A1 ... L2 for the coordinates of M_4(5), in listing order.
const NameTable& bring_names();
// The eight coordinates of the cube M_4(3); names are the fractions in display form.
const NameTable& cube_names();
// Name table for (q, n) if one ships with the library.
const NameTable* names_for(const HeckeParams& p);

// Display form of a listed coordinate, e.g. "2/(1√2)" or "1√2/3".
std::string printed_form(const HFCoord& u, const HeckeParams& p);

} // namespace hfmap
