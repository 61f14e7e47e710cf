#include "rainbow/certificate.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rainbow {

namespace {

std::string expect_line(std::istream& in, const std::string& what) {
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("certificate: unexpected end of input, wanted " + what);
    return line;
}

// Parses "key value...", checking the key.
std::istringstream keyed(const std::string& line, const std::string& key) {
    std::istringstream ss(line);
    std::string k;
    ss >> k;
    if (k != key)
        throw std::invalid_argument("certificate: expected '" + key + "' line, got: " + line);
    return ss;
}

} // namespace

void write_certificate(std::ostream& out, const ColoringCertificate& cert) {
    out << "rainbow-certificate v1\n";
    out << "route " << cert.route << "\n";
    out << "k " << cert.palette_size << "\n";
    out << "budget_ok " << (cert.budget_ok ? 1 : 0) << "\n";
    out << "fallback_used " << (cert.fallback_used ? 1 : 0) << "\n";
    out << "verified " << (cert.verdict.connected ? 1 : 0) << "\n";
    out << "witness";
    for (int v : cert.witness) out << ' ' << v;
    out << "\n";
    out << "edges " << cert.coloring.colors.size() << "\n";
    for (const auto& [e, c] : cert.coloring.colors)
        out << e.u << ' ' << e.v << ' ' << c << "\n";
}

ColoringCertificate read_certificate(std::istream& in) {
    std::string header = expect_line(in, "header");
    if (header != "rainbow-certificate v1")
        throw std::invalid_argument("certificate: unknown header: " + header);

    ColoringCertificate cert;
    {
        auto ss = keyed(expect_line(in, "route"), "route");
        ss >> cert.route;
    }
    {
        auto ss = keyed(expect_line(in, "k"), "k");
        if (!(ss >> cert.palette_size))
            throw std::invalid_argument("certificate: bad palette size");
    }
    int flag = 0;
    {
        auto ss = keyed(expect_line(in, "budget_ok"), "budget_ok");
        ss >> flag;
        cert.budget_ok = flag != 0;
    }
    {
        auto ss = keyed(expect_line(in, "fallback_used"), "fallback_used");
        ss >> flag;
        cert.fallback_used = flag != 0;
    }
    {
        auto ss = keyed(expect_line(in, "verified"), "verified");
        ss >> flag;
        cert.verdict.connected = flag != 0;
    }
    {
        auto ss = keyed(expect_line(in, "witness"), "witness");
        int v;
        while (ss >> v) cert.witness.push_back(v);
    }
    std::size_t m = 0;
    {
        auto ss = keyed(expect_line(in, "edges"), "edges");
        if (!(ss >> m)) throw std::invalid_argument("certificate: bad edge count");
    }
    for (std::size_t i = 0; i < m; ++i) {
        std::istringstream ss(expect_line(in, "edge line"));
        int u, v, c;
        if (!(ss >> u >> v >> c))
            throw std::invalid_argument("certificate: bad edge line " + std::to_string(i));
        cert.coloring.assign(Edge(u, v), c);
    }
    cert.coloring.k = cert.palette_size;
    cert.coloring.refresh_surjectivity();
    return cert;
}

void write_certificate_file(const std::string& path, const ColoringCertificate& cert) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open for writing: " + path);
    write_certificate(out, cert);
}

ColoringCertificate read_certificate_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open for reading: " + path);
    return read_certificate(in);
}

} // namespace rainbow
