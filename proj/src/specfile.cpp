#include <bigqh/specfile.hpp>

#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

namespace bigqh
{

namespace
{

const std::vector<std::pair<std::string, std::string>> &unicode_table()
{
    static const std::vector<std::pair<std::string, std::string>> table = {
        {"\xCE\x94", "D"},         // Δ
        {"\xE2\x88\x98", "*"},     // ∘
        {"\xE2\x8B\x86", "*"},     // ⋆
        {"\xC2\xB7", "*"},         // ·
        {"\xC3\x97", "*"},         // ×
        {"\xE2\x88\x92", "-"},     // unicode minus
        {"\xE2\x82\x80", "0"},     {"\xE2\x82\x81", "1"}, {"\xE2\x82\x82", "2"}, {"\xE2\x82\x83", "3"},
        {"\xE2\x82\x84", "4"},     {"\xE2\x82\x85", "5"}, {"\xE2\x82\x86", "6"}, {"\xE2\x82\x87", "7"},
        {"\xE2\x82\x88", "8"},     {"\xE2\x82\x89", "9"},
        {"\xC2\xB2", "^2"},        {"\xC2\xB3", "^3"},
        {"\xE2\x80\x9A", ","},     // single low quote, sometimes used as a subscript comma
    };
    return table;
}

std::string trim(const std::string &s)
{
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) {
        ++a;
    }
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) {
        --b;
    }
    return s.substr(a, b - a);
}

// Scalar in Q[q, 1/q] or a matrix (a column vector for D-labels).
struct Value {
    bool scalar = true;
    QPoly s;
    QMatrix m;
};

class ExprParser
{
public:
    // `resolve` maps a label token ("D4,1" or "M2") to its value; it throws
    // std::string on failure.
    using Resolver = std::function<QMatrix(char, const std::string &)>;

    ExprParser(std::string text, std::size_t line, Resolver resolve)
        : text_(std::move(text)), line_(line), resolve_(std::move(resolve))
    {
    }

    Value parse()
    {
        Value v = expr();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("unexpected '" + text_.substr(pos_) + "'");
        }
        return v;
    }

private:
    [[noreturn]] void fail(const std::string &msg) const
    {
        throw SpecParseError(line_, msg);
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }
    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool starts_factor()
    {
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'q') {
            return true;
        }
        return (c == 'D' || c == 'M') && pos_ + 1 < text_.size()
               && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]));
    }

    Value add(Value a, const Value &b, bool subtract)
    {
        if (a.scalar != b.scalar) {
            fail("cannot add a scalar and a " + std::string(a.scalar ? "class" : "scalar") + " term");
        }
        if (a.scalar) {
            a.s = subtract ? a.s - b.s : a.s + b.s;
        } else {
            if (a.m.rows() != b.m.rows() || a.m.cols() != b.m.cols()) {
                fail("mismatched shapes in sum");
            }
            a.m = subtract ? a.m - b.m : a.m + b.m;
        }
        return a;
    }

    Value mul(const Value &a, const Value &b)
    {
        Value r;
        if (a.scalar && b.scalar) {
            r.s = a.s * b.s;
        } else if (a.scalar || b.scalar) {
            r.scalar = false;
            r.m = a.scalar ? a.s * b.m : b.s * a.m;
        } else {
            if (a.m.cols() != b.m.rows()) {
                fail("product of two classes is not defined here");
            }
            r.scalar = false;
            r.m = a.m * b.m;
        }
        return r;
    }

    Value expr()
    {
        Value v = term();
        for (;;) {
            const char c = peek();
            if (c != '+' && c != '-') {
                return v;
            }
            ++pos_;
            v = add(std::move(v), term(), c == '-');
        }
    }

    Value term()
    {
        Value v = unary();
        for (;;) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                v = mul(v, unary());
            } else if (c == '/') {
                ++pos_;
                const Value d = unary();
                if (!d.scalar || !d.s.is_constant() || d.s.is_zero()) {
                    fail("division only by a nonzero rational constant");
                }
                Rational inv = 1 / d.s.coeff(0);
                v = mul(v, Value{true, QPoly(inv), {}});
            } else if (starts_factor()) {
                v = mul(v, unary());
            } else {
                return v;
            }
        }
    }

    Value unary()
    {
        if (peek() == '-') {
            ++pos_;
            return mul(Value{true, QPoly(-1), {}}, unary());
        }
        if (peek() == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    Value power()
    {
        Value base = atom();
        if (peek() != '^') {
            return base;
        }
        ++pos_;
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("exponent must be an integer");
        }
        const long e = std::stol(text_.substr(start, pos_ - start));
        if (negative) {
            if (!base.scalar || !base.s.is_unit()) {
                fail("negative exponent needs a monomial base");
            }
            base.s = base.s.unit_inverse();
        }
        Value r = base.scalar ? Value{true, QPoly(1), {}} : Value{false, {}, QMatrix::identity(base.m.rows())};
        if (!base.scalar && !base.m.is_square()) {
            fail("power of a class is not defined here");
        }
        for (long k = 0; k < e; ++k) {
            r = mul(r, base);
        }
        return r;
    }

    Value atom()
    {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Value v = expr();
            if (peek() != ')') {
                fail("missing ')'");
            }
            ++pos_;
            return v;
        }
        if (c == 'q') {
            ++pos_;
            return Value{true, QPoly::q(), {}};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E')) {
                std::size_t end = pos_;
                while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '.')) {
                    ++end;
                }
                fail("non-rational coefficient '" + text_.substr(start, end - start) + "'");
            }
            return Value{true, QPoly(Rational(text_.substr(start, pos_ - start))), {}};
        }
        if ((c == 'D' || c == 'M') && pos_ + 1 < text_.size()
            && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            ++pos_;
            const std::size_t start = pos_;
            while (pos_ < text_.size()
                   && (std::isdigit(static_cast<unsigned char>(text_[pos_]))
                       || (text_[pos_] == ',' && pos_ + 1 < text_.size()
                           && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))))) {
                ++pos_;
            }
            const std::string name = text_.substr(start, pos_ - start);
            try {
                return Value{false, {}, resolve_(c, name)};
            } catch (const std::string &msg) {
                fail(msg);
            }
        }
        if (c == '\0') {
            fail("unexpected end of expression");
        }
        std::size_t end = pos_;
        while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) {
            ++end;
        }
        const std::string token = text_.substr(pos_, std::max<std::size_t>(end - pos_, 1));
        if (std::isalpha(static_cast<unsigned char>(c))) {
            fail("non-rational coefficient or unknown symbol '" + token + "'");
        }
        fail("unexpected '" + token + "'");
    }

    std::string text_;
    std::size_t pos_ = 0;
    std::size_t line_;
    Resolver resolve_;
};

std::string strip_label(const std::string &token, char prefix, std::size_t line)
{
    if (token.size() < 2 || token[0] != prefix) {
        throw SpecParseError(line, "expected a " + std::string(1, prefix) + "-label, got '" + token + "'");
    }
    return token.substr(1);
}

struct GeneratorLine {
    std::string left;
    std::string right;
    std::string rhs;
    std::size_t line;
};

struct DerivedLine {
    std::string label;
    std::string rhs;
    std::size_t line;
};

bool is_header_word(const std::string &w)
{
    if (w.empty()) {
        return false;
    }
    for (char c : w) {
        if (!std::isupper(static_cast<unsigned char>(c)) && c != '_') {
            return false;
        }
    }
    return true;
}

} // namespace

std::string normalize_input(const std::string &text)
{
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        bool replaced = false;
        if (static_cast<unsigned char>(text[i]) >= 0x80) {
            for (const auto &[from, to] : unicode_table()) {
                if (text.compare(i, from.size(), from) == 0) {
                    out += to;
                    i += from.size();
                    replaced = true;
                    break;
                }
            }
        }
        if (!replaced) {
            out += text[i++];
        }
    }
    return out;
}

AlgebraSpec parse_spec(const std::string &raw)
{
    std::vector<BasisLabel> basis;
    std::map<std::string, std::size_t> basis_line;
    std::optional<int> q_degree;
    std::optional<int> t_degree;
    std::optional<std::string> unit;
    std::optional<std::string> point;
    std::optional<std::string> deform;
    std::vector<GeneratorLine> gens;
    std::vector<DerivedLine> derived;
    std::size_t basis_header = 0;

    std::string section;
    std::istringstream in(normalize_input(raw));
    std::string line_text;
    std::size_t lineno = 0;
    while (std::getline(in, line_text)) {
        ++lineno;
        const auto hash = line_text.find('#');
        const std::string line = trim(hash == std::string::npos ? line_text : line_text.substr(0, hash));
        if (line.empty()) {
            continue;
        }
        std::istringstream words(line);
        std::string first;
        words >> first;

        if (is_header_word(first)) {
            std::string rest;
            std::getline(words, rest);
            rest = trim(rest);
            if (first == "BASIS" || first == "GRADING" || first == "GENERATORS" || first == "DERIVED") {
                if (!rest.empty()) {
                    throw SpecParseError(lineno, "unexpected text after " + first);
                }
                section = first;
                if (first == "BASIS") {
                    if (basis_header != 0) {
                        throw SpecParseError(lineno, "duplicate BASIS section");
                    }
                    basis_header = lineno;
                }
                continue;
            }
            if (first == "UNIT" || first == "POINT" || first == "DEFORM") {
                if (rest.empty() || rest.find(' ') != std::string::npos) {
                    throw SpecParseError(lineno, first + " takes exactly one D-label");
                }
                auto &slot = first == "UNIT" ? unit : (first == "POINT" ? point : deform);
                if (slot) {
                    throw SpecParseError(lineno, "duplicate " + first);
                }
                slot = strip_label(rest, 'D', lineno);
                section.clear();
                continue;
            }
            throw SpecParseError(lineno, "unknown section '" + first + "'");
        }

        if (section.empty()) {
            throw SpecParseError(lineno, "statement outside of a section: '" + line + "'");
        }
        if (section == "BASIS") {
            std::string deg;
            std::string extra;
            words >> deg >> extra;
            if (deg.empty() || !extra.empty()) {
                throw SpecParseError(lineno, "expected '<D-label> <degree>'");
            }
            const std::string name = strip_label(first, 'D', lineno);
            if (basis_line.count(name) != 0) {
                throw SpecParseError(lineno, "duplicate basis label D" + name);
            }
            int d = 0;
            try {
                std::size_t used = 0;
                d = std::stoi(deg, &used);
                if (used != deg.size()) {
                    throw std::invalid_argument(deg);
                }
            } catch (const std::exception &) {
                throw SpecParseError(lineno, "degree must be an integer, got '" + deg + "'");
            }
            basis.push_back({name, d});
            basis_line[name] = lineno;
        } else if (section == "GRADING") {
            std::string val;
            std::string extra;
            words >> val >> extra;
            if ((first != "q" && first != "t") || val.empty() || !extra.empty()) {
                throw SpecParseError(lineno, "expected 'q <degree>' or 't <degree>'");
            }
            int d = 0;
            try {
                std::size_t used = 0;
                d = std::stoi(val, &used);
                if (used != val.size()) {
                    throw std::invalid_argument(val);
                }
            } catch (const std::exception &) {
                throw SpecParseError(lineno, "degree must be an integer, got '" + val + "'");
            }
            (first == "q" ? q_degree : t_degree) = d;
        } else if (section == "GENERATORS") {
            const auto eq = line.find('=');
            if (eq == std::string::npos) {
                throw SpecParseError(lineno, "expected 'Da * Db = <combination>'");
            }
            const std::string lhs = line.substr(0, eq);
            const auto star = lhs.find('*');
            if (star == std::string::npos) {
                throw SpecParseError(lineno, "left side must be 'Da * Db'");
            }
            gens.push_back({strip_label(trim(lhs.substr(0, star)), 'D', lineno),
                            strip_label(trim(lhs.substr(star + 1)), 'D', lineno), trim(line.substr(eq + 1)), lineno});
            if (gens.back().rhs.empty()) {
                throw SpecParseError(lineno, "empty right side");
            }
        } else { // DERIVED
            const auto eq = line.find('=');
            if (eq == std::string::npos) {
                throw SpecParseError(lineno, "expected 'Ma = <expression>'");
            }
            derived.push_back({strip_label(trim(line.substr(0, eq)), 'M', lineno), trim(line.substr(eq + 1)), lineno});
        }
    }
    const std::size_t end_line = lineno + 1;

    if (basis.empty()) {
        throw SpecParseError(basis_header == 0 ? end_line : basis_header, "BASIS is missing or empty");
    }
    if (!q_degree) {
        throw SpecParseError(end_line, "GRADING must give a degree for q");
    }
    if (!t_degree) {
        throw SpecParseError(end_line, "GRADING must give a degree for t");
    }
    if (!unit) {
        throw SpecParseError(end_line, "UNIT is missing");
    }
    if (!point) {
        throw SpecParseError(end_line, "POINT is missing");
    }

    const std::size_t n = basis.size();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) {
        index[basis[i].name] = i;
    }
    auto require = [&](const std::string &name, std::size_t line) {
        const auto it = index.find(name);
        if (it == index.end()) {
            throw SpecParseError(line, "undeclared label D" + name);
        }
        return it->second;
    };
    require(*unit, end_line);
    require(*point, end_line);
    if (deform) {
        require(*deform, end_line);
    }
    const std::size_t unit_idx = index[*unit];

    auto d_resolver = [&](char prefix, const std::string &name) -> QMatrix {
        if (prefix != 'D') {
            throw std::string("matrix label M" + name + " in a product table");
        }
        const auto it = index.find(name);
        if (it == index.end()) {
            throw std::string("undeclared label D" + name);
        }
        QMatrix v(n, 1);
        v(it->second, 0) = QPoly(1);
        return v;
    };

    // Generator tables.
    Presentation pres;
    std::map<std::size_t, std::map<std::size_t, std::pair<QVector, std::size_t>>> table;
    std::map<std::size_t, std::size_t> first_line;
    for (const auto &g : gens) {
        const std::size_t a = require(g.left, g.line);
        const std::size_t b = require(g.right, g.line);
        if (!first_line.count(a)) {
            first_line[a] = g.line;
            pres.generators.push_back(g.left);
        }
        const Value v = ExprParser(g.rhs, g.line, d_resolver).parse();
        QVector col(n);
        if (v.scalar) {
            if (!v.s.is_zero()) {
                throw SpecParseError(g.line, "right side must be a combination of D-labels");
            }
        } else {
            col = v.m.column(0);
        }
        if (table[a].count(b)) {
            throw SpecParseError(g.line, "duplicate product D" + g.left + " * D" + g.right);
        }
        table[a][b] = {col, g.line};
    }

    std::vector<std::optional<QMatrix>> structure(n);
    structure[unit_idx] = QMatrix::identity(n);
    for (const auto &gname : pres.generators) {
        const std::size_t a = index[gname];
        if (a == unit_idx) {
            throw SpecParseError(first_line[a], "the unit D" + gname + " cannot be a generator");
        }
        QMatrix m(n, n);
        for (std::size_t b = 0; b < n; ++b) {
            QVector col;
            if (auto it = table[a].find(b); it != table[a].end()) {
                col = it->second.first;
            } else if (b == unit_idx) {
                col = QVector(n);
                col[a] = QPoly(1);
            } else if (table.count(b) && table[b].count(a)) {
                col = table[b][a].first;
            } else {
                throw SpecParseError(first_line[a], "missing product D" + gname + " * D" + basis[b].name);
            }
            for (std::size_t c = 0; c < n; ++c) {
                m(c, b) = col[c];
            }
        }
        structure[a] = std::move(m);
    }

    auto m_resolver = [&](char prefix, const std::string &name) -> QMatrix {
        if (prefix != 'M') {
            throw std::string("class label D" + name + " in a matrix recurrence");
        }
        const auto it = index.find(name);
        if (it == index.end()) {
            throw std::string("undeclared label M" + name);
        }
        if (!structure[it->second]) {
            throw std::string("M" + name + " is used before it is defined");
        }
        return *structure[it->second];
    };
    for (const auto &d : derived) {
        const std::size_t a = require(d.label, d.line);
        if (structure[a]) {
            throw SpecParseError(d.line, "M" + d.label + " is already defined");
        }
        const Value v = ExprParser(d.rhs, d.line, m_resolver).parse();
        if (v.scalar || !v.m.is_square() || v.m.rows() != n) {
            throw SpecParseError(d.line, "right side must be a matrix expression");
        }
        structure[a] = v.m;
        pres.derived.emplace_back(d.label, d.rhs);
    }

    std::vector<QMatrix> mats;
    for (std::size_t i = 0; i < n; ++i) {
        if (!structure[i]) {
            throw SpecParseError(basis_line[basis[i].name], "no multiplication matrix for D" + basis[i].name);
        }
        mats.push_back(std::move(*structure[i]));
    }
    try {
        return AlgebraSpec(std::move(basis), *q_degree, *t_degree, std::move(mats), *unit, *point, deform,
                           std::move(pres));
    } catch (const SpecError &e) {
        throw SpecParseError(end_line, e.what());
    }
}

AlgebraSpec parse_spec_file(const std::string &path)
{
    std::ifstream f(path);
    if (!f) {
        throw SpecParseError(0, "cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_spec(ss.str());
}

namespace
{

std::string render_spec(const AlgebraSpec &spec, bool use_presentation)
{
    const std::size_t n = spec.dim();
    std::ostringstream out;
    out << "BASIS\n";
    for (const auto &b : spec.basis()) {
        out << "  D" << b.name << ' ' << b.degree << '\n';
    }
    out << "GRADING\n  q " << spec.q_degree() << "\n  t " << spec.t_degree() << '\n';
    out << "UNIT D" << spec.basis()[spec.unit()].name << '\n';
    out << "POINT D" << spec.basis()[spec.point()].name << '\n';
    if (spec.deform()) {
        out << "DEFORM D" << spec.basis()[*spec.deform()].name << '\n';
    }

    std::vector<std::string> generators;
    std::vector<std::pair<std::string, std::string>> derived;
    if (use_presentation) {
        generators = spec.presentation().generators;
        derived = spec.presentation().derived;
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            if (i != spec.unit()) {
                generators.push_back(spec.basis()[i].name);
            }
        }
    }

    out << "GENERATORS\n";
    std::set<std::size_t> done;
    for (const auto &g : generators) {
        const std::size_t a = spec.index_of(g);
        for (std::size_t b = 0; b < n; ++b) {
            const QVector col = spec.structure(a).column(b);
            // Columns the parser fills in by itself are left out when they agree.
            if (b == spec.unit() && col == spec.basis_vector(a)) {
                continue;
            }
            if (done.count(b) && col == spec.structure(b).column(a)) {
                continue;
            }
            out << "  D" << g << " * D" << spec.basis()[b].name << " = " << describe(spec, col) << '\n';
        }
        done.insert(a);
    }
    if (!derived.empty()) {
        out << "DERIVED\n";
        for (const auto &[label, expr] : derived) {
            out << "  M" << label << " = " << expr << '\n';
        }
    }
    return out.str();
}

} // namespace

std::string dump_spec(const AlgebraSpec &spec)
{
    if (!spec.presentation().generators.empty()) {
        std::string text = render_spec(spec, true);
        try {
            if (parse_spec(text) == spec) {
                return text;
            }
        } catch (const SpecParseError &) {
        }
    }
    return render_spec(spec, false);
}

} // namespace bigqh
