#include "fdpc/codespec.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fdpc {

void CodeSpec::validate() const {
    if (t < 2) throw std::invalid_argument("CodeSpec: t must be >= 2");
    if (s < 1) throw std::invalid_argument("CodeSpec: s must be >= 1");
    if (permSeeds.size() != s - 1)
        throw std::invalid_argument("CodeSpec: permSeeds must have s-1 entries");
    std::set<std::uint32_t> seen;
    for (auto c : shortenedColumns) {
        if (c >= n()) throw std::invalid_argument("CodeSpec: shortened column out of range");
        if (!seen.insert(c).second)
            throw std::invalid_argument("CodeSpec: duplicate shortened column");
    }
}

void save_spec(const CodeSpec& spec, const std::string& path) {
    spec.validate();
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << "t " << spec.t << '\n';
    f << "n " << spec.n() << '\n';
    f << "s " << spec.s << '\n';
    for (std::size_t i = 0; i < spec.permSeeds.size(); ++i)
        f << "perm_seed_" << (i + 1) << ' ' << spec.permSeeds[i] << '\n';
    if (!spec.shortenedColumns.empty()) {
        f << "shortened_columns";
        for (auto c : spec.shortenedColumns) f << ' ' << c;
        f << '\n';
    }
    if (!f) throw std::runtime_error("write failed: " + path);
}

CodeSpec load_spec(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open: " + path);
    CodeSpec spec;
    spec.permSeeds.clear();
    std::uint32_t statedN = 0;
    bool sawN = false;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string key;
        ss >> key;
        if (key == "t") {
            ss >> spec.t;
        } else if (key == "n") {
            ss >> statedN;
            sawN = true;
        } else if (key == "s") {
            ss >> spec.s;
        } else if (key.rfind("perm_seed_", 0) == 0) {
            std::size_t idx = std::stoul(key.substr(10));
            if (spec.permSeeds.size() < idx) spec.permSeeds.resize(idx, 0);
            ss >> spec.permSeeds[idx - 1];
        } else if (key == "shortened_columns") {
            std::uint32_t c;
            while (ss >> c) spec.shortenedColumns.push_back(c);
        } else {
            throw std::runtime_error("unknown key in spec file: " + key);
        }
    }
    if (sawN && statedN != spec.n())
        throw std::runtime_error("spec file: n does not equal 4*t^2");
    spec.validate();
    return spec;
}

}  // namespace fdpc
