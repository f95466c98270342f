#include "symplobs/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "symplobs/error.hpp"

namespace symplobs {

using nlohmann::json;

namespace {

std::string join_errors(const std::vector<std::string>& errors)
{
    std::string s;
    for (std::size_t i = 0; i < errors.size(); ++i)
        s += (i ? "\n" : "") + errors[i];
    return s;
}

// Collects schema problems with their field paths instead of stopping at the first.
class Reader {
public:
    Reader(const ParseOptions& opts, std::vector<std::string>& warnings)
        : opts_(opts), warnings_(warnings)
    {
    }

    std::vector<std::string> errors;

    void fail(const std::string& path, const std::string& msg) { errors.push_back(path + ": " + msg); }

    bool object(const json& j, const std::string& path)
    {
        if (!j.is_object()) {
            fail(path, "expected an object");
            return false;
        }
        return true;
    }

    void allow_only(const json& j, const std::string& path, const std::set<std::string>& keys)
    {
        for (const auto& [key, _] : j.items()) {
            if (keys.count(key))
                continue;
            if (opts_.lenient)
                warnings_.push_back(join(path, key) + ": unknown field ignored");
            else
                fail(join(path, key), "unknown field");
        }
    }

    static std::string join(const std::string& path, const std::string& key)
    {
        return path.empty() ? key : path + "." + key;
    }

    const json* field(const json& j, const std::string& path, const std::string& key, bool required)
    {
        if (j.contains(key))
            return &j.at(key);
        if (required)
            fail(join(path, key), "missing required field");
        return nullptr;
    }

    std::optional<std::int64_t> integer(const json& j, const std::string& path)
    {
        if (j.is_number_integer())
            return j.get<std::int64_t>();
        fail(path, j.is_number_float() ? "floats are not allowed; expected an integer"
                                       : "expected an integer");
        return std::nullopt;
    }

    std::optional<bool> boolean(const json& j, const std::string& path)
    {
        if (j.is_boolean())
            return j.get<bool>();
        fail(path, "expected true or false");
        return std::nullopt;
    }

    std::optional<std::string> string(const json& j, const std::string& path)
    {
        if (j.is_string())
            return j.get<std::string>();
        fail(path, "expected a string");
        return std::nullopt;
    }

    std::optional<BitVec> bits(const json& j, const std::string& path)
    {
        if (!j.is_array()) {
            fail(path, "expected an array of 0/1");
            return std::nullopt;
        }
        BitVec out;
        for (std::size_t i = 0; i < j.size(); ++i) {
            const auto& e = j[i];
            if (!e.is_number_integer() || (e.get<std::int64_t>() != 0 && e.get<std::int64_t>() != 1)) {
                fail(path + "[" + std::to_string(i) + "]", "expected 0 or 1");
                return std::nullopt;
            }
            out.push_back(static_cast<std::uint8_t>(e.get<std::int64_t>()));
        }
        return out;
    }

    std::optional<mpq_class> coeff(const json& j, const std::string& path)
    {
        if (j.is_number_integer())
            return mpq_class(mpz_class(std::to_string(j.get<std::int64_t>())));
        if (j.is_string()) {
            try {
                return parse_coeff(j.get<std::string>());
            } catch (const InputError& e) {
                fail(path, e.what());
                return std::nullopt;
            }
        }
        fail(path, "expected an integer or a \"p/q\" string");
        return std::nullopt;
    }

    std::optional<Coeffs> coeffs(const json& j, const std::string& path)
    {
        if (!j.is_array()) {
            fail(path, "expected an array of coefficients");
            return std::nullopt;
        }
        Coeffs out;
        for (std::size_t i = 0; i < j.size(); ++i) {
            auto c = coeff(j[i], path + "[" + std::to_string(i) + "]");
            if (!c)
                return std::nullopt;
            out.push_back(*c);
        }
        return out;
    }

    std::optional<PscFlag> psc(const json& j, const std::string& path)
    {
        if (j.is_null())
            return PscFlag{};
        if (j.is_boolean())
            return PscFlag{j.get<bool>()};
        fail(path, "expected true, false or null");
        return std::nullopt;
    }

private:
    const ParseOptions& opts_;
    std::vector<std::string>& warnings_;
};

void add_violations(Reader& rd, const std::string& path, const std::vector<std::string>& v)
{
    for (const auto& s : v)
        rd.errors.push_back(Reader::join(path, s));
}

std::optional<Manifold4> read_manifold4(Reader& rd, const json& j, const std::string& path)
{
    if (!rd.object(j, path))
        return std::nullopt;
    rd.allow_only(j, path, {"name", "orientable", "b1", "Q", "h1_dim", "w1_tx", "w2_tx", "cup11"});
    Manifold4 m;
    const std::size_t before = rd.errors.size();
    if (auto* f = rd.field(j, path, "name", true))
        if (auto s = rd.string(*f, Reader::join(path, "name")))
            m.name = *s;
    if (auto* f = rd.field(j, path, "orientable", true))
        if (auto b = rd.boolean(*f, Reader::join(path, "orientable")))
            m.orientable = *b;
    if (auto* f = rd.field(j, path, "b1", true))
        if (auto v = rd.integer(*f, Reader::join(path, "b1")))
            m.b1 = *v;
    if (auto* f = rd.field(j, path, "Q", true)) {
        const std::string qp = Reader::join(path, "Q");
        if (!f->is_array()) {
            rd.fail(qp, "expected an array of rows");
        } else {
            std::vector<IntVec> rows;
            bool ok = true;
            for (std::size_t i = 0; i < f->size() && ok; ++i) {
                const auto& row = (*f)[i];
                if (!row.is_array()) {
                    rd.fail(qp + "[" + std::to_string(i) + "]", "expected an array of integers");
                    ok = false;
                    break;
                }
                IntVec r;
                for (std::size_t c = 0; c < row.size(); ++c) {
                    auto v = rd.integer(row[c], qp + "[" + std::to_string(i) + "][" + std::to_string(c) + "]");
                    if (!v) {
                        ok = false;
                        break;
                    }
                    r.push_back(*v);
                }
                rows.push_back(std::move(r));
            }
            if (ok) {
                try {
                    m.q = BilinearForm(rows);
                } catch (const InputError& e) {
                    rd.fail(qp, e.what());
                }
            }
        }
    }
    m.h1_dim = m.b1 > 0 ? static_cast<std::size_t>(m.b1) : 0;
    if (auto* f = rd.field(j, path, "h1_dim", false))
        if (auto v = rd.integer(*f, Reader::join(path, "h1_dim"))) {
            if (*v < 0)
                rd.fail(Reader::join(path, "h1_dim"), "must be nonnegative");
            else
                m.h1_dim = static_cast<std::size_t>(*v);
        }
    m.w1_tx = zero_bits(m.h1_dim);
    if (auto* f = rd.field(j, path, "w1_tx", false))
        if (auto b = rd.bits(*f, Reader::join(path, "w1_tx")))
            m.w1_tx = *b;
    if (auto* f = rd.field(j, path, "w2_tx", true))
        if (auto b = rd.bits(*f, Reader::join(path, "w2_tx")))
            m.w2_tx = *b;
    m.cup11.assign(m.h1_dim, std::vector<BitVec>(m.h1_dim, zero_bits(m.q.rank())));
    if (auto* f = rd.field(j, path, "cup11", false)) {
        const std::string cp = Reader::join(path, "cup11");
        if (!f->is_array()) {
            rd.fail(cp, "expected an h1_dim x h1_dim table");
        } else {
            CupTable t;
            for (std::size_t i = 0; i < f->size(); ++i) {
                const auto& row = (*f)[i];
                std::vector<BitVec> r;
                if (!row.is_array()) {
                    rd.fail(cp + "[" + std::to_string(i) + "]", "expected an array");
                    continue;
                }
                for (std::size_t c = 0; c < row.size(); ++c)
                    if (auto b = rd.bits(row[c], cp + "[" + std::to_string(i) + "][" + std::to_string(c) + "]"))
                        r.push_back(*b);
                t.push_back(std::move(r));
            }
            m.cup11 = std::move(t);
        }
    }
    if (rd.errors.size() != before)
        return std::nullopt;
    add_violations(rd, path, validate(m));
    if (rd.errors.size() != before)
        return std::nullopt;
    return m;
}

std::optional<Surface2> read_surface2(Reader& rd, const json& j, const std::string& path)
{
    if (!rd.object(j, path))
        return std::nullopt;
    rd.allow_only(j, path, {"name", "orientable", "h1_dim", "w1_tx"});
    Surface2 s;
    const std::size_t before = rd.errors.size();
    if (auto* f = rd.field(j, path, "name", true))
        if (auto v = rd.string(*f, Reader::join(path, "name")))
            s.name = *v;
    if (auto* f = rd.field(j, path, "orientable", true))
        if (auto b = rd.boolean(*f, Reader::join(path, "orientable")))
            s.orientable = *b;
    if (auto* f = rd.field(j, path, "h1_dim", true))
        if (auto v = rd.integer(*f, Reader::join(path, "h1_dim"))) {
            if (*v < 0)
                rd.fail(Reader::join(path, "h1_dim"), "must be nonnegative");
            else
                s.h1_dim = static_cast<std::size_t>(*v);
        }
    s.w1_tx = zero_bits(s.h1_dim);
    if (auto* f = rd.field(j, path, "w1_tx", false))
        if (auto b = rd.bits(*f, Reader::join(path, "w1_tx")))
            s.w1_tx = *b;
    if (rd.errors.size() != before)
        return std::nullopt;
    add_violations(rd, path, validate(s));
    if (rd.errors.size() != before)
        return std::nullopt;
    return s;
}

std::optional<SplitData> read_split(Reader& rd, const json& j, const std::string& path)
{
    if (!rd.object(j, path))
        return std::nullopt;
    rd.allow_only(j, path, {"b2plus_x1", "x2_empty", "b2plus_x2", "z_components_psc", "oriented"});
    SplitData s;
    const std::size_t before = rd.errors.size();
    if (auto* f = rd.field(j, path, "b2plus_x1", true))
        if (auto v = rd.integer(*f, Reader::join(path, "b2plus_x1")))
            s.b2plus_x1 = *v;
    if (auto* f = rd.field(j, path, "x2_empty", true))
        if (auto b = rd.boolean(*f, Reader::join(path, "x2_empty")))
            s.x2_empty = *b;
    if (auto* f = rd.field(j, path, "b2plus_x2", false))
        if (auto v = rd.integer(*f, Reader::join(path, "b2plus_x2")))
            s.b2plus_x2 = *v;
    if (auto* f = rd.field(j, path, "oriented", false))
        if (auto b = rd.boolean(*f, Reader::join(path, "oriented")))
            s.oriented = *b;
    if (auto* f = rd.field(j, path, "z_components_psc", true)) {
        const std::string zp = Reader::join(path, "z_components_psc");
        if (!f->is_array())
            rd.fail(zp, "expected an array of true/false/null");
        else
            for (std::size_t i = 0; i < f->size(); ++i)
                if (auto p = rd.psc((*f)[i], zp + "[" + std::to_string(i) + "]"))
                    s.z_components_psc.push_back(*p);
    }
    if (rd.errors.size() != before)
        return std::nullopt;
    add_violations(rd, path, validate(s));
    if (rd.errors.size() != before)
        return std::nullopt;
    return s;
}

std::optional<GradedRing> read_ring(Reader& rd, const json& j, const std::string& path)
{
    if (!rd.object(j, path))
        return std::nullopt;
    rd.allow_only(j, path, {"field", "dims", "products", "unit"});
    const std::size_t before = rd.errors.size();
    Field field = Field::Q;
    if (auto* f = rd.field(j, path, "field", true))
        if (auto s = rd.string(*f, Reader::join(path, "field"))) {
            if (*s == "Q")
                field = Field::Q;
            else if (*s == "F2")
                field = Field::F2;
            else
                rd.fail(Reader::join(path, "field"), "expected \"Q\" or \"F2\"");
        }
    std::vector<std::size_t> dims;
    if (auto* f = rd.field(j, path, "dims", true)) {
        if (!f->is_array())
            rd.fail(Reader::join(path, "dims"), "expected an array of dimensions");
        else
            for (std::size_t i = 0; i < f->size(); ++i)
                if (auto v = rd.integer((*f)[i], Reader::join(path, "dims") + "[" + std::to_string(i) + "]")) {
                    if (*v < 0)
                        rd.fail(Reader::join(path, "dims") + "[" + std::to_string(i) + "]", "must be nonnegative");
                    else
                        dims.push_back(static_cast<std::size_t>(*v));
                }
    }
    std::vector<ProductEntry> products;
    if (auto* f = rd.field(j, path, "products", false)) {
        const std::string pp = Reader::join(path, "products");
        if (!f->is_array()) {
            rd.fail(pp, "expected an array");
        } else {
            for (std::size_t i = 0; i < f->size(); ++i) {
                const auto& e = (*f)[i];
                const std::string ep = pp + "[" + std::to_string(i) + "]";
                if (!rd.object(e, ep))
                    continue;
                rd.allow_only(e, ep, {"left", "right", "coeffs"});
                ProductEntry pe;
                bool ok = true;
                for (const char* side : {"left", "right"}) {
                    const json* s = rd.field(e, ep, side, true);
                    if (!s) {
                        ok = false;
                        continue;
                    }
                    if (!s->is_array() || s->size() != 2 || !(*s)[0].is_number_unsigned() ||
                        !(*s)[1].is_number_unsigned()) {
                        rd.fail(Reader::join(ep, side), "expected [degree, index]");
                        ok = false;
                        continue;
                    }
                    const auto deg = (*s)[0].get<std::size_t>(), idx = (*s)[1].get<std::size_t>();
                    if (std::string(side) == "left") {
                        pe.p = deg;
                        pe.i = idx;
                    } else {
                        pe.q = deg;
                        pe.j = idx;
                    }
                }
                if (const json* c = rd.field(e, ep, "coeffs", true)) {
                    if (auto cs = rd.coeffs(*c, Reader::join(ep, "coeffs")))
                        pe.coeffs = *cs;
                    else
                        ok = false;
                } else {
                    ok = false;
                }
                if (ok)
                    products.push_back(std::move(pe));
            }
        }
    }
    std::optional<Coeffs> unit;
    if (auto* f = rd.field(j, path, "unit", false))
        unit = rd.coeffs(*f, Reader::join(path, "unit"));
    if (rd.errors.size() != before)
        return std::nullopt;
    try {
        return GradedRing(field, dims, products, unit);
    } catch (const InputError& e) {
        rd.fail(path, e.what());
        return std::nullopt;
    }
}

std::optional<Manifold> read_inline_manifold(Reader& rd, const json& j, const std::string& path)
{
    if (!rd.object(j, path))
        return std::nullopt;
    rd.allow_only(j, path, {"kind", "payload", "schema_version"});
    const json* k = rd.field(j, path, "kind", true);
    const json* p = rd.field(j, path, "payload", true);
    if (!k || !p)
        return std::nullopt;
    const auto kind = rd.string(*k, Reader::join(path, "kind"));
    if (!kind)
        return std::nullopt;
    if (*kind == "manifold4") {
        if (auto m = read_manifold4(rd, *p, Reader::join(path, "payload")))
            return Manifold{*m};
    } else if (*kind == "surface2") {
        if (auto s = read_surface2(rd, *p, Reader::join(path, "payload")))
            return Manifold{*s};
    } else {
        rd.fail(Reader::join(path, "kind"), "expected \"manifold4\" or \"surface2\"");
    }
    return std::nullopt;
}

std::optional<LogPairData> read_pair(Reader& rd, const json& j, const std::string& path)
{
    if (!rd.object(j, path))
        return std::nullopt;
    rd.allow_only(j, path, {"manifold", "pd_z", "k", "z_components", "decomposition",
                            "d_coorientable", "elliptic_residue_zero", "split"});
    const std::size_t before = rd.errors.size();
    LogPairData p;
    bool have_manifold = false;
    if (auto* f = rd.field(j, path, "manifold", true)) {
        const std::string mp = Reader::join(path, "manifold");
        if (f->is_string()) {
            try {
                p.manifold = resolve_manifold_ref(f->get<std::string>());
                p.manifold_ref = f->get<std::string>();
                have_manifold = true;
            } catch (const InputError& e) {
                rd.fail(mp, e.what());
            }
        } else if (auto m = read_inline_manifold(rd, *f, mp)) {
            p.manifold = *m;
            have_manifold = true;
        }
    }
    if (!have_manifold)
        return std::nullopt;
    p.pd_z = zero_bits(h1_dim_of(p.manifold));
    if (auto* f = rd.field(j, path, "pd_z", false))
        if (auto b = rd.bits(*f, Reader::join(path, "pd_z")))
            p.pd_z = *b;
    if (auto* f = rd.field(j, path, "k", false))
        if (auto v = rd.integer(*f, Reader::join(path, "k")))
            p.k = *v;
    if (auto* f = rd.field(j, path, "z_components", true)) {
        const std::string zp = Reader::join(path, "z_components");
        if (!f->is_array()) {
            rd.fail(zp, "expected an array");
        } else {
            for (std::size_t i = 0; i < f->size(); ++i) {
                const auto& e = (*f)[i];
                const std::string ep = zp + "[" + std::to_string(i) + "]";
                if (!rd.object(e, ep))
                    continue;
                rd.allow_only(e, ep, {"name", "psc"});
                ZComponent c;
                if (auto* n = rd.field(e, ep, "name", true))
                    if (auto s = rd.string(*n, Reader::join(ep, "name")))
                        c.name = *s;
                if (auto* ps = rd.field(e, ep, "psc", false))
                    if (auto v = rd.psc(*ps, Reader::join(ep, "psc")))
                        c.psc = *v;
                p.z_components.push_back(std::move(c));
            }
        }
    }
    if (auto* f = rd.field(j, path, "decomposition", false)) {
        const std::string dp = Reader::join(path, "decomposition");
        if (rd.object(*f, dp)) {
            rd.allow_only(*f, dp, {"chi_plus", "chi_minus"});
            Decomposition d;
            auto* cp = rd.field(*f, dp, "chi_plus", true);
            auto* cm = rd.field(*f, dp, "chi_minus", true);
            auto vp = cp ? rd.integer(*cp, Reader::join(dp, "chi_plus")) : std::nullopt;
            auto vm = cm ? rd.integer(*cm, Reader::join(dp, "chi_minus")) : std::nullopt;
            if (vp && vm)
                p.decomposition = Decomposition{*vp, *vm};
        }
    }
    if (auto* f = rd.field(j, path, "d_coorientable", false))
        p.d_coorientable = rd.boolean(*f, Reader::join(path, "d_coorientable"));
    if (auto* f = rd.field(j, path, "elliptic_residue_zero", false))
        p.elliptic_residue_zero = rd.boolean(*f, Reader::join(path, "elliptic_residue_zero"));
    if (auto* f = rd.field(j, path, "split", false))
        p.split = read_split(rd, *f, Reader::join(path, "split"));
    if (rd.errors.size() != before)
        return std::nullopt;
    std::vector<std::string> violations;
    for (const auto& v : validate(p))
        if (v.rfind("manifold.", 0) != 0 && v.rfind("split.", 0) != 0)
            violations.push_back(v);
    add_violations(rd, path, violations);
    if (rd.errors.size() != before)
        return std::nullopt;
    return p;
}

json bits_json(const BitVec& v)
{
    json a = json::array();
    for (auto b : v)
        a.push_back(static_cast<int>(b));
    return a;
}

json coeff_json(const mpq_class& c)
{
    if (c.get_den() == 1 && c.get_num().fits_slong_p())
        return json(static_cast<std::int64_t>(c.get_num().get_si()));
    return json(coeff_to_string(c));
}

json coeffs_json(const Coeffs& cs)
{
    json a = json::array();
    for (const auto& c : cs)
        a.push_back(coeff_json(c));
    return a;
}

json psc_json(const PscFlag& f) { return f ? json(*f) : json(nullptr); }

json manifold4_json(const Manifold4& m)
{
    json q = json::array();
    for (const auto& row : m.q.rows())
        q.push_back(row);
    json cup = json::array();
    for (const auto& row : m.cup11) {
        json r = json::array();
        for (const auto& v : row)
            r.push_back(bits_json(v));
        cup.push_back(r);
    }
    return json{{"name", m.name}, {"orientable", m.orientable}, {"b1", m.b1},
                {"Q", q},         {"h1_dim", m.h1_dim},         {"w1_tx", bits_json(m.w1_tx)},
                {"w2_tx", bits_json(m.w2_tx)}, {"cup11", cup}};
}

json surface2_json(const Surface2& s)
{
    return json{{"name", s.name}, {"orientable", s.orientable}, {"h1_dim", s.h1_dim},
                {"w1_tx", bits_json(s.w1_tx)}};
}

json split_json(const SplitData& s)
{
    json psc = json::array();
    for (const auto& f : s.z_components_psc)
        psc.push_back(psc_json(f));
    json j{{"b2plus_x1", s.b2plus_x1}, {"x2_empty", s.x2_empty}, {"z_components_psc", psc},
           {"oriented", s.oriented}};
    if (s.b2plus_x2)
        j["b2plus_x2"] = *s.b2plus_x2;
    return j;
}

json ring_json(const GradedRing& r)
{
    const bool implicit_unit = r.dims()[0] == 1 && r.unit() == r.basis(0, 0);
    json products = json::array();
    for (const auto& e : r.nonzero_products()) {
        if (implicit_unit && (e.p == 0 || e.q == 0))
            continue;
        products.push_back(json{{"left", {e.p, e.i}}, {"right", {e.q, e.j}}, {"coeffs", coeffs_json(e.coeffs)}});
    }
    json j{{"field", r.field() == Field::Q ? "Q" : "F2"}, {"dims", r.dims()}, {"products", products}};
    if (!implicit_unit)
        j["unit"] = coeffs_json(r.unit().coeffs);
    return j;
}

json pair_json(const LogPairData& p)
{
    json comps = json::array();
    for (const auto& c : p.z_components) {
        json e{{"name", c.name}};
        if (c.psc)
            e["psc"] = *c.psc;
        comps.push_back(e);
    }
    json j{{"pd_z", bits_json(p.pd_z)}, {"k", p.k}, {"z_components", comps}};
    if (!p.manifold_ref.empty()) {
        j["manifold"] = p.manifold_ref;
    } else if (const auto* m = std::get_if<Manifold4>(&p.manifold)) {
        j["manifold"] = json{{"kind", "manifold4"}, {"payload", manifold4_json(*m)}};
    } else {
        j["manifold"] = json{{"kind", "surface2"}, {"payload", surface2_json(std::get<Surface2>(p.manifold))}};
    }
    if (p.decomposition)
        j["decomposition"] = json{{"chi_plus", p.decomposition->chi_plus}, {"chi_minus", p.decomposition->chi_minus}};
    if (p.d_coorientable)
        j["d_coorientable"] = *p.d_coorientable;
    if (p.elliptic_residue_zero)
        j["elliptic_residue_zero"] = *p.elliptic_residue_zero;
    if (p.split)
        j["split"] = split_json(*p.split);
    return j;
}

} // namespace

ParseError::ParseError(std::vector<std::string> errors)
    : InputError(join_errors(errors)), errors_(std::move(errors))
{
}

std::string to_string(DocKind k)
{
    switch (k) {
    case DocKind::Manifold4:
        return "manifold4";
    case DocKind::Surface2:
        return "surface2";
    case DocKind::Pair:
        return "pair";
    case DocKind::Ring:
        return "ring";
    case DocKind::Split:
        return "split";
    }
    return "?";
}

Manifold resolve_manifold_ref(const std::string& ref)
{
    const bool expression =
        ref.find('#') != std::string::npos || (!ref.empty() && std::isdigit(static_cast<unsigned char>(ref[0])));
    if (expression)
        return manifold_from_expression(ref);
    return catalog_lookup(ref);
}

Document parse_document(const std::string& text, const ParseOptions& opts)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError({"syntax error at byte " + std::to_string(e.byte) + ": " + e.what()});
    }
    Document doc;
    Reader rd(opts, doc.warnings);
    if (!rd.object(j, "document"))
        throw ParseError(rd.errors);
    rd.allow_only(j, "", {"schema_version", "kind", "payload"});
    if (auto* v = rd.field(j, "", "schema_version", true))
        if (auto s = rd.string(*v, "schema_version")) {
            doc.schema_version = *s;
            if (*s != kSchemaVersion)
                rd.fail("schema_version", "unsupported version \"" + *s + "\" (expected \"" + kSchemaVersion + "\")");
        }
    const json* k = rd.field(j, "", "kind", true);
    const json* p = rd.field(j, "", "payload", true);
    std::optional<std::string> kind = k ? rd.string(*k, "kind") : std::nullopt;
    if (!rd.errors.empty() || !kind || !p)
        throw ParseError(rd.errors);

    if (*kind == "manifold4") {
        doc.kind = DocKind::Manifold4;
        if (auto m = read_manifold4(rd, *p, "payload"))
            doc.payload = *m;
    } else if (*kind == "surface2") {
        doc.kind = DocKind::Surface2;
        if (auto s = read_surface2(rd, *p, "payload"))
            doc.payload = *s;
    } else if (*kind == "pair") {
        doc.kind = DocKind::Pair;
        if (auto pr = read_pair(rd, *p, "payload"))
            doc.payload = *pr;
    } else if (*kind == "ring") {
        doc.kind = DocKind::Ring;
        if (auto r = read_ring(rd, *p, "payload"))
            doc.payload = *r;
    } else if (*kind == "split") {
        doc.kind = DocKind::Split;
        if (auto s = read_split(rd, *p, "payload"))
            doc.payload = *s;
    } else {
        rd.fail("kind", "unknown document kind \"" + *kind +
                            "\" (expected manifold4, surface2, pair, ring, split)");
    }
    if (!rd.errors.empty())
        throw ParseError(rd.errors);
    return doc;
}

Document load_document(const std::string& path, const ParseOptions& opts)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_document(ss.str(), opts);
    } catch (const ParseError& e) {
        std::vector<std::string> errs;
        for (const auto& s : e.errors())
            errs.push_back(path + ": " + s);
        throw ParseError(errs);
    }
}

Document make_document(Payload payload)
{
    Document d;
    d.kind = static_cast<DocKind>(payload.index());
    d.payload = std::move(payload);
    return d;
}

json document_to_json(const Document& doc)
{
    json payload = std::visit(
        [](const auto& x) -> json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Manifold4>)
                return manifold4_json(x);
            else if constexpr (std::is_same_v<T, Surface2>)
                return surface2_json(x);
            else if constexpr (std::is_same_v<T, LogPairData>)
                return pair_json(x);
            else if constexpr (std::is_same_v<T, GradedRing>)
                return ring_json(x);
            else
                return split_json(x);
        },
        doc.payload);
    return json{{"schema_version", doc.schema_version}, {"kind", to_string(doc.kind)}, {"payload", payload}};
}

std::string render_document(const Document& doc) { return document_to_json(doc).dump(2) + "\n"; }

json report_to_json(const ObstructionReport& r)
{
    json verdicts = json::array();
    for (const auto& v : r.verdicts) {
        json e{{"test", v.test}, {"status", to_string(v.status)}};
        if (!v.detail.empty())
            e[v.status == Status::Obstructed ? "witness"
              : v.status == Status::Inconclusive ? "reason"
                                                 : "evidence"] = v.detail;
        verdicts.push_back(e);
    }
    return json{{"subject", r.subject}, {"kind", r.kind},   {"verdicts", verdicts},
                {"overall", to_string(r.overall)}, {"notes", r.notes}};
}

std::string render_report_json(const ObstructionReport& r) { return report_to_json(r).dump(2) + "\n"; }

std::string render_report_text(const ObstructionReport& r, bool color)
{
    auto tag = [&](Status s) {
        const std::string t = "[" + to_string(s) + "]";
        if (!color)
            return t;
        const char* code = s == Status::Obstructed ? "\033[31m" : s == Status::Inconclusive ? "\033[33m" : "\033[32m";
        return std::string(code) + t + "\033[0m";
    };
    std::ostringstream os;
    os << "subject: " << r.subject << "\n";
    os << "kind: " << r.kind << "\n";
    for (const auto& v : r.verdicts) {
        os << tag(v.status) << " " << v.test;
        if (!v.detail.empty())
            os << ": " << v.detail;
        os << "\n";
    }
    for (const auto& n : r.notes)
        os << "note: " << n << "\n";
    os << "overall: " << tag(r.overall) << "\n";
    return os.str();
}

} // namespace symplobs
