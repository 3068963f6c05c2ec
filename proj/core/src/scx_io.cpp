#include "znx/scx_io.hpp"

#include <fstream>
#include <sstream>

#include "znx/errors.hpp"

namespace znx {

SimplicialComplex read_scx(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "scx 1") throw InvalidInput("scx: expected header 'scx 1'");
    if (!std::getline(in, line)) throw InvalidInput("scx: missing vertex count line");
    int vertex_count = -1;
    {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag >> vertex_count) || tag != "v" || vertex_count < 0)
            throw InvalidInput("scx: malformed vertex count line '" + line + "'");
        std::string rest;
        if (ls >> rest) throw InvalidInput("scx: trailing data on vertex count line");
    }
    std::vector<Simplex> faces;
    int lineno = 2;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<Vertex> ids;
        std::string tok;
        while (ls >> tok) {
            std::size_t pos = 0;
            long v = -1;
            try {
                v = std::stol(tok, &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (pos != tok.size() || v < 0 || v >= vertex_count)
                throw InvalidInput("scx line " + std::to_string(lineno) + ": bad vertex id '" + tok + "'");
            ids.push_back(static_cast<Vertex>(v));
        }
        for (std::size_t i = 1; i < ids.size(); ++i)
            if (ids[i] <= ids[i - 1])
                throw InvalidInput("scx line " + std::to_string(lineno) + ": ids must be strictly increasing");
        faces.emplace_back(std::move(ids));
    }
    return SimplicialComplex::from_maximal_faces(vertex_count, faces);
}

SimplicialComplex read_scx_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    return read_scx(in);
}

void write_scx(std::ostream& out, const SimplicialComplex& c) {
    out << "scx 1\n" << "v " << c.vertex_count() << '\n';
    // std::set<Simplex> iterates lexicographically, so maximal_faces is sorted.
    for (const auto& f : c.maximal_faces()) {
        const auto& vs = f.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
        out << '\n';
    }
}

void write_scx_file(const std::string& path, const SimplicialComplex& c) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write " + path);
    write_scx(out, c);
}

std::string to_scx(const SimplicialComplex& c) {
    std::ostringstream out;
    write_scx(out, c);
    return out.str();
}

}  // namespace znx
