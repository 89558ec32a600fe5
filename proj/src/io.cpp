#include "ksl/io.hpp"

#include <fstream>
#include <sstream>

namespace ksl {

namespace {

// Strips comments and yields nonempty lines.
std::vector<std::string> content_lines(std::istream& in) {
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string word;
        if (probe >> word) out.push_back(line);
    }
    return out;
}

int parse_index(std::istringstream& ss, int n, const std::string& what) {
    long v;
    if (!(ss >> v)) throw ParseError("expected an index in " + what);
    if (v < 0 || v >= n) throw ParseError("index out of range in " + what);
    return static_cast<int>(v);
}

std::ifstream open_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return in;
}

}  // namespace

FiniteSemigroup parse_semigroup(std::istream& in) {
    auto lines = content_lines(in);
    if (lines.empty()) throw ParseError("empty semigroup file");
    std::istringstream head(lines[0]);
    std::string kw;
    long n;
    if (!(head >> kw >> n) || kw != "n" || n < 1) throw ParseError("expected 'n <N>' header");
    if (lines.size() < static_cast<size_t>(n) + 1) throw ParseError("missing table rows");

    std::vector<std::vector<int>> table(n);
    for (long r = 0; r < n; ++r) {
        std::istringstream row(lines[r + 1]);
        for (long c = 0; c < n; ++c)
            table[r].push_back(parse_index(row, static_cast<int>(n), "table row"));
        long extra;
        if (row >> extra) throw ParseError("too many entries in a table row");
    }

    auto S = make_semigroup(std::move(table));  // verifies associativity

    for (size_t i = n + 1; i < lines.size(); ++i) {
        std::istringstream tail(lines[i]);
        std::string word;
        tail >> word;
        if (word != "identity") throw ParseError("unexpected line: " + lines[i]);
        int e = parse_index(tail, S.n, "identity");
        if (!S.identity || *S.identity != e)
            throw ParseError("declared identity does not match the table");
    }
    return S;
}

InvolutiveAutomorphism parse_sigma(std::istream& in, const FiniteSemigroup& S) {
    auto lines = content_lines(in);
    if (lines.empty()) throw ParseError("empty sigma file");
    std::istringstream row(lines[0]);
    InvolutiveAutomorphism sigma;
    for (int i = 0; i < S.n; ++i) sigma.perm.push_back(parse_index(row, S.n, "sigma"));
    if (!is_involutive_automorphism(S, sigma.perm))
        throw ParseError("map is not an involutive automorphism of the semigroup");
    return sigma;
}

DiscreteMeasure parse_measure(std::istream& in, const FiniteSemigroup& S) {
    DiscreteMeasure mu;
    for (const auto& l : content_lines(in)) {
        std::istringstream ss(l);
        int z = parse_index(ss, S.n, "measure");
        double re, im;
        if (!(ss >> re >> im)) throw ParseError("expected '<index> <re> <im>'");
        mu.atoms.push_back({z, cplx(re, im)});
    }
    if (mu.atoms.empty()) throw ParseError("empty measure file");
    return mu;
}

CFunction parse_function(std::istream& in, const FiniteSemigroup& S) {
    auto lines = content_lines(in);
    if (lines.size() != static_cast<size_t>(S.n))
        throw ParseError("function file must have exactly one line per element");
    CFunction f(S.n);
    for (int x = 0; x < S.n; ++x) {
        std::istringstream ss(lines[x]);
        double re, im;
        if (!(ss >> re >> im)) throw ParseError("expected '<re> <im>'");
        f[x] = cplx(re, im);
    }
    return f;
}

FiniteSemigroup read_semigroup(const std::string& path) {
    auto in = open_file(path);
    return parse_semigroup(in);
}
InvolutiveAutomorphism read_sigma(const std::string& path, const FiniteSemigroup& S) {
    auto in = open_file(path);
    return parse_sigma(in, S);
}
DiscreteMeasure read_measure(const std::string& path, const FiniteSemigroup& S) {
    auto in = open_file(path);
    return parse_measure(in, S);
}
CFunction read_function(const std::string& path, const FiniteSemigroup& S) {
    auto in = open_file(path);
    return parse_function(in, S);
}

void write_semigroup(std::ostream& out, const FiniteSemigroup& S) {
    out << "n " << S.n << "\n";
    for (int x = 0; x < S.n; ++x) {
        for (int y = 0; y < S.n; ++y) out << (y ? " " : "") << S.table[x][y];
        out << "\n";
    }
    if (S.identity) out << "identity " << *S.identity << "\n";
}

void write_sigma(std::ostream& out, const InvolutiveAutomorphism& sigma) {
    for (size_t i = 0; i < sigma.perm.size(); ++i) out << (i ? " " : "") << sigma.perm[i];
    out << "\n";
}

void write_function(std::ostream& out, const CFunction& f) {
    char buf[64];
    for (int x = 0; x < f.size(); ++x) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g", f(x).real(), f(x).imag());
        out << buf << "\n";
    }
}

}  // namespace ksl
