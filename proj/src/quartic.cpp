#include "tropbt/quartic.hpp"

#include "tropbt/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tropbt {

std::string to_string(LPt p) { return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")"; }

const std::array<LPt, 15>& QuarticSpec::support() {
    static const std::array<LPt, 15> pts = [] {
        std::array<LPt, 15> a{};
        int k = 0;
        for (int i = 0; i <= 4; ++i)
            for (int j = 0; i + j <= 4; ++j) a[k++] = LPt{i, j};
        return a;
    }();
    return pts;
}

namespace {
int support_index(LPt p) {
    const auto& s = QuarticSpec::support();
    for (int k = 0; k < 15; ++k)
        if (s[k] == p) return k;
    fail(errc::point_outside_simplex, "lattice point " + to_string(p) + " outside the simplex");
}
} // namespace

QuarticSpec::QuarticSpec(std::array<CoeffEntry, 15> entries) {
    std::array<bool, 15> seen{};
    for (const auto& e : entries) {
        if (!in_simplex4(e.p))
            fail(errc::point_outside_simplex, "entry " + to_string(e.p) + " outside the simplex");
        if (e.sign != +1 && e.sign != -1)
            fail(errc::sign_not_plus_minus, "sign of " + to_string(e.p) + " must be +1 or -1");
        if (e.lead <= 0) fail(errc::malformed_rational, "lead of " + to_string(e.p) + " must be positive");
        int k = support_index(e.p);
        if (seen[k]) fail(errc::duplicate_entry, "duplicate entry for " + to_string(e.p));
        seen[k] = true;
        entries_[k] = e;
    }
    for (int k = 0; k < 15; ++k)
        if (!seen[k]) fail(errc::missing_entry, "missing entry for " + to_string(support()[k]));
}

const CoeffEntry& QuarticSpec::at(LPt p) const { return entries_[support_index(p)]; }

QuarticSpec QuarticSpec::with_sign(LPt p, int sign) const {
    QuarticSpec out = *this;
    out.entries_[support_index(p)].sign = sign;
    return out;
}

namespace {

int parse_sign_token(const std::string& raw) {
    std::string t;
    // Normalize the unicode minus sign U+2212 to '-'.
    for (std::size_t i = 0; i < raw.size();) {
        if (i + 2 < raw.size() && static_cast<unsigned char>(raw[i]) == 0xE2 &&
            static_cast<unsigned char>(raw[i + 1]) == 0x88 &&
            static_cast<unsigned char>(raw[i + 2]) == 0x92) {
            t.push_back('-');
            i += 3;
        } else {
            t.push_back(raw[i]);
            ++i;
        }
    }
    if (t == "+" || t == "+1" || t == "1") return +1;
    if (t == "-" || t == "-1") return -1;
    fail(errc::sign_not_plus_minus, "sign token '" + raw + "' is not +/-");
}

} // namespace

QuarticSpec parse_spec(const std::string& text) {
    std::vector<CoeffEntry> records;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        bool have_i = false, have_j = false, have_val = false, have_sign = false;
        CoeffEntry e;
        e.lead = 1;
        bool any = false;
        while (ls >> tok) {
            any = true;
            auto eq = tok.find('=');
            if (eq == std::string::npos)
                fail(errc::malformed_rational,
                     "line " + std::to_string(lineno) + ": expected key=value, got '" + tok + "'");
            std::string key = tok.substr(0, eq), value = tok.substr(eq + 1);
            if (key == "i") {
                e.p.i = static_cast<int>(parse_rational(value).get_num().get_si());
                have_i = true;
            } else if (key == "j") {
                e.p.j = static_cast<int>(parse_rational(value).get_num().get_si());
                have_j = true;
            } else if (key == "val") {
                e.val = parse_rational(value);
                have_val = true;
            } else if (key == "sign") {
                e.sign = parse_sign_token(value);
                have_sign = true;
            } else if (key == "lead") {
                e.lead = parse_rational(value);
            } else {
                fail(errc::malformed_rational,
                     "line " + std::to_string(lineno) + ": unknown field '" + key + "'");
            }
        }
        if (!any) continue;
        if (!have_i || !have_j || !have_val || !have_sign)
            fail(errc::missing_entry,
                 "line " + std::to_string(lineno) + ": record needs i, j, val and sign");
        records.push_back(e);
    }
    std::array<CoeffEntry, 15> arr{};
    std::array<bool, 15> seen{};
    for (const auto& e : records) {
        if (!in_simplex4(e.p))
            fail(errc::point_outside_simplex, "entry " + to_string(e.p) + " outside the simplex");
        int k = 0;
        for (; k < 15; ++k)
            if (QuarticSpec::support()[k] == e.p) break;
        if (seen[k]) fail(errc::duplicate_entry, "duplicate entry for " + to_string(e.p));
        seen[k] = true;
        arr[k] = e;
    }
    for (int k = 0; k < 15; ++k)
        if (!seen[k]) fail(errc::missing_entry, "missing entry for " + to_string(QuarticSpec::support()[k]));
    return QuarticSpec(arr);
}

// ---------------------------------------------------------------------------
// S3 action. Elements indexed id, t0, t1, t0t1, t1t0, t0t1t0, where a word
// acts by function composition (rightmost generator first).
// ---------------------------------------------------------------------------

namespace {

struct S3Data {
    // lattice action: p -> M*p + (shift, 0)
    int m[2][2];
    int shift;
    // tropical plane action, linear
    int t[2][2];
    const char* word;
};

constexpr S3Data k_s3[6] = {
    {{{1, 0}, {0, 1}}, 0, {{1, 0}, {0, 1}}, "id"},
    {{{0, 1}, {1, 0}}, 0, {{0, 1}, {1, 0}}, "t0"},
    {{{-1, -1}, {0, 1}}, 4, {{-1, 0}, {-1, 1}}, "t1"},
    {{{0, 1}, {-1, -1}}, 0, {{-1, 1}, {-1, 0}}, "t0t1"},   // shift on second coord, see lattice()
    {{{-1, -1}, {1, 0}}, 4, {{0, -1}, {1, -1}}, "t1t0"},
    {{{1, 0}, {-1, -1}}, 0, {{1, -1}, {0, -1}}, "t0t1t0"},
};

// Lattice shifts are (shift, 0) for t1 and t1t0, (0, 4) for t0t1 and t0t1t0.
LPt lattice_apply(int idx, LPt p) {
    const auto& d = k_s3[idx];
    int i = d.m[0][0] * p.i + d.m[0][1] * p.j;
    int j = d.m[1][0] * p.i + d.m[1][1] * p.j;
    switch (idx) {
        case 2: case 4: i += 4; break;
        case 3: case 5: j += 4; break;
        default: break;
    }
    return LPt{i, j};
}

int compose_index(int a, int b) {
    // Identify a∘b by its action on two lattice points.
    LPt p1 = lattice_apply(a, lattice_apply(b, LPt{1, 0}));
    LPt p2 = lattice_apply(a, lattice_apply(b, LPt{0, 1}));
    for (int k = 0; k < 6; ++k)
        if (lattice_apply(k, LPt{1, 0}) == p1 && lattice_apply(k, LPt{0, 1}) == p2) return k;
    fail(errc::internal, "S3 composition fell outside the group");
}

} // namespace

S3Element S3Element::from_word(const std::string& word) {
    std::string w;
    for (char c : word)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '*') w.push_back(c);
    if (w == "id" || w.empty()) return identity();
    // Words list generators in application order: "t1t0" applies t1 first.
    S3Element out = identity();
    std::size_t i = 0;
    while (i < w.size()) {
        if (w.compare(i, 2, "t0") == 0) {
            out = t0() * out;
            i += 2;
        } else if (w.compare(i, 2, "t1") == 0) {
            out = t1() * out;
            i += 2;
        } else {
            fail(errc::internal, "bad S3 word '" + word + "'");
        }
    }
    return out;
}

const std::array<S3Element, 6>& S3Element::all() {
    // Iteration (and canonicalization tie-break) order:
    // id < t0 < t1 < t0t1 < t0t1t0 < t1t0. Tightest word first; the two
    // longest words are ordered so that symmetric shapes whose match set is
    // {t1t0, t0t1t0} canonicalize with t0t1t0, matching the published table.
    static const std::array<S3Element, 6> v = {S3Element(0), S3Element(1), S3Element(2),
                                               S3Element(4), S3Element(5), S3Element(3)};
    return v;
}

S3Element S3Element::operator*(const S3Element& o) const {
    return S3Element(compose_index(idx_, o.idx_));
}

S3Element S3Element::inverse() const {
    for (int k = 0; k < 6; ++k)
        if (compose_index(idx_, k) == 0) return S3Element(k);
    fail(errc::internal, "S3 element without inverse");
}

const std::string& S3Element::word() const {
    // Application order: index 3 is t0∘t1 (t1 applied first), written "t1t0".
    static const std::array<std::string, 6> words = {"id", "t0", "t1", "t1t0", "t0t1", "t0t1t0"};
    return words[idx_];
}

LPt S3Element::lattice(LPt p) const { return lattice_apply(idx_, p); }

Pt S3Element::plane(const Pt& v) const {
    const auto& t = k_s3[idx_].t;
    return Pt{Rat(t[0][0]) * v.x + Rat(t[0][1]) * v.y, Rat(t[1][0]) * v.x + Rat(t[1][1]) * v.y};
}

IVec S3Element::plane_dir(const IVec& d) const {
    const auto& t = k_s3[idx_].t;
    return IVec{t[0][0] * d.x + t[0][1] * d.y, t[1][0] * d.x + t[1][1] * d.y};
}

LPt apply_s3_lattice(const S3Element& sigma, LPt p) {
    if (!in_simplex4(p)) fail(errc::point_outside_simplex, to_string(p) + " outside the simplex");
    return sigma.lattice(p);
}

Pt apply_s3_plane(const S3Element& sigma, const Pt& v) { return sigma.plane(v); }

SignTable signs_of(const QuarticSpec& spec) {
    SignTable s;
    for (const auto& e : spec.entries()) s[e.p] = e.sign;
    return s;
}

SignTable apply_s3_signs(const S3Element& sigma, const SignTable& s) {
    // out[sigma(p)] = s[p], i.e. out[p] = s[sigma^{-1}(p)].
    SignTable out;
    for (const auto& [p, v] : s) out[sigma.lattice(p)] = v;
    return out;
}

QuarticSpec transform_spec(const S3Element& sigma, const QuarticSpec& spec) {
    std::array<CoeffEntry, 15> out{};
    int k = 0;
    for (const auto& e : spec.entries()) {
        CoeffEntry n = e;
        n.p = sigma.lattice(e.p);
        out[k++] = n;
    }
    return QuarticSpec(out);
}

} // namespace tropbt
