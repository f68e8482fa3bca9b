#include "conelab/scenario.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace conelab {

std::vector<LatMat> ActionScenario::aut_gens() const {
    std::vector<LatMat> out;
    for (const auto& g : gens)
        if (g.role == "automorphism") out.push_back(g.mat);
    return out;
}

std::vector<LatMat> ActionScenario::bir_gens() const {
    std::vector<LatMat> out;
    for (const auto& g : gens)
        if (g.role == "birational") out.push_back(g.mat);
    return out;
}

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

struct KeyVal {
    std::string key, value;
};

KeyVal split_kv(const std::string& line) {
    auto eq = line.find('=');
    if (eq == std::string::npos) throw data_error("expected 'key = value': " + line);
    return {trim(line.substr(0, eq)), trim(line.substr(eq + 1))};
}

}  // namespace

ActionScenario parse_scenario(const std::string& text) {
    std::istringstream in(text);
    std::string line, section;

    long d = 0;
    std::optional<int> dimension;
    std::vector<Ray> nef_rays, mov_rays;
    std::vector<NamedGen> gens;
    std::optional<FormData> form;
    std::optional<Cn1Data> cn1;
    std::optional<bool> c2_positive;
    // ray lines may appear before [scenario]'s d only by mistake; collect raw
    std::vector<std::pair<std::string, std::string>> pending_rays;  // section, text

    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw data_error("malformed section header: " + line);
            section = line.substr(1, line.size() - 2);
            if (section != "scenario" && section != "nef" && section != "mov" &&
                section != "generators" && section != "form" && section != "cn1" &&
                section != "c2")
                throw data_error("unknown section [" + section + "]");
            continue;
        }
        auto [key, value] = split_kv(line);
        if (section == "scenario") {
            if (key == "d") {
                d = std::stol(value);
                if (d < 2 || !is_squarefree(d))
                    throw data_error("d must be a square-free integer >= 2, got " + value);
            } else if (key == "dimension") {
                dimension = std::stoi(value);
                if (*dimension < 2) throw data_error("dimension must be >= 2");
            } else {
                throw data_error("unknown key '" + key + "' in [scenario]");
            }
        } else if (section == "nef" || section == "mov") {
            if (key != "ray") throw data_error("unknown key '" + key + "' in [" + section + "]");
            pending_rays.emplace_back(section, value);
        } else if (section == "generators") {
            auto sp = value.find(' ');
            if (sp == std::string::npos)
                throw data_error("generator needs '<role> [a,b,c,d]': " + line);
            std::string role = trim(value.substr(0, sp));
            if (role != "automorphism" && role != "birational")
                throw data_error("generator role must be automorphism or birational, got " + role);
            gens.push_back({key, role, LatMat::parse(value.substr(sp + 1))});
        } else if (section == "form") {
            if (!form) form.emplace();
            if (key == "n") {
                form->n = std::stoi(value);
            } else if (key == "basis") {
                if (value != "nef" && value != "eigen")
                    throw data_error("form basis must be nef or eigen");
                form->basis = value;
            } else if (key.rfind("coeff ", 0) == 0) {
                int m = std::stoi(key.substr(6));
                form->coeffs[m] = QF::parse(value, d);
            } else {
                throw data_error("unknown key '" + key + "' in [form]");
            }
        } else if (section == "cn1") {
            if (!cn1) cn1.emplace();
            if (key == "basis") {
                if (value != "nef" && value != "eigen")
                    throw data_error("cn1 basis must be nef or eigen");
                cn1->basis = value;
            } else if (key == "phi") {
                // unscaled pair "(qf,qf)", unlike a ray not canonicalized
                std::string s;
                for (char c : value)
                    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
                if (s.size() < 3 || s.front() != '(' || s.back() != ')')
                    throw data_error("phi must look like '(qf,qf)': " + value);
                s = s.substr(1, s.size() - 2);
                int depth = 0;
                size_t comma = std::string::npos;
                for (size_t i = 0; i < s.size(); ++i) {
                    if (s[i] == '(') ++depth;
                    if (s[i] == ')') --depth;
                    if (s[i] == ',' && depth == 0) {
                        comma = i;
                        break;
                    }
                }
                if (comma == std::string::npos)
                    throw data_error("phi needs two components: " + value);
                cn1->phi1 = QF::parse(s.substr(0, comma), d);
                cn1->phi2 = QF::parse(s.substr(comma + 1), d);
            } else {
                throw data_error("unknown key '" + key + "' in [cn1]");
            }
        } else if (section == "c2") {
            if (key != "positive") throw data_error("unknown key '" + key + "' in [c2]");
            if (value != "true" && value != "false")
                throw data_error("c2 positive must be true or false");
            c2_positive = value == "true";
        } else {
            throw data_error("content before any section header: " + line);
        }
    }

    if (d == 0) throw data_error("missing [scenario] d");
    for (const auto& [sec, txt] : pending_rays) {
        (sec == "nef" ? nef_rays : mov_rays).push_back(Ray::parse(txt, d));
    }
    if (nef_rays.size() != 2) throw data_error("[nef] needs exactly two rays");
    if (mov_rays.size() != 2) throw data_error("[mov] needs exactly two rays");
    if (form) {
        if (form->n < 2) throw data_error("[form] needs n >= 2");
        if (form->basis.empty()) throw data_error("[form] needs a basis");
        for (const auto& [m, v] : form->coeffs)
            if (m < 0 || m > form->n) throw data_error("form coefficient exponent out of range");
    }
    if (cn1 && cn1->basis.empty()) throw data_error("[cn1] needs a basis");

    return ActionScenario{d,
                          dimension,
                          Cone2(nef_rays[0], nef_rays[1]),
                          Cone2(mov_rays[0], mov_rays[1]),
                          std::move(gens),
                          std::move(form),
                          std::move(cn1),
                          c2_positive};
}

ActionScenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open scenario file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str());
}

std::string serialize_scenario(const ActionScenario& s) {
    std::string out;
    out += "[scenario]\n";
    out += "d = " + std::to_string(s.d) + "\n";
    if (s.dimension) out += "dimension = " + std::to_string(*s.dimension) + "\n";
    out += "\n[nef]\n";
    out += "ray = " + s.nef.r1().str() + "\n";
    out += "ray = " + s.nef.r2().str() + "\n";
    out += "\n[mov]\n";
    out += "ray = " + s.mov.r1().str() + "\n";
    out += "ray = " + s.mov.r2().str() + "\n";
    if (!s.gens.empty()) {
        out += "\n[generators]\n";
        for (const auto& g : s.gens) out += g.name + " = " + g.role + " " + g.mat.str() + "\n";
    }
    if (s.form) {
        out += "\n[form]\n";
        out += "n = " + std::to_string(s.form->n) + "\n";
        out += "basis = " + s.form->basis + "\n";
        for (const auto& [m, v] : s.form->coeffs)
            out += "coeff " + std::to_string(m) + " = " + v.str() + "\n";
    }
    if (s.cn1) {
        out += "\n[cn1]\n";
        out += "basis = " + s.cn1->basis + "\n";
        out += "phi = (" + s.cn1->phi1.str() + "," + s.cn1->phi2.str() + ")\n";
    }
    if (s.c2_positive) {
        out += "\n[c2]\n";
        out += std::string("positive = ") + (*s.c2_positive ? "true" : "false") + "\n";
    }
    return out;
}

namespace {

bool same_plus_part(const GroupProfile& a, const GroupProfile& b) {
    bool a_inf = a.is_infinite(), b_inf = b.is_infinite();
    if (a_inf != b_inf) return false;
    if (!a_inf) return true;  // both plus parts trivial
    return *a.plus_generator == *b.plus_generator ||
           *a.plus_generator == b.plus_generator->inverse();
}

}  // namespace

std::vector<Finding> validate_scenario(const ActionScenario& s) {
    std::vector<Finding> out;
    auto error = [&](const std::string& rule, const std::string& msg) {
        out.push_back({Severity::ERROR, rule, msg});
    };
    auto info = [&](const std::string& msg) { out.push_back({Severity::INFO, "info", msg}); };

    auto aut = s.aut_gens();
    auto bir = s.bir_gens();

    // (d) claimed det -1 elements must square to the identity
    for (const auto& g : s.gens) {
        if (g.mat.det() == -1 && !(g.mat * g.mat).is_identity())
            error("d", "det -1 generator " + g.name + " = " + g.mat.str() +
                           " fails M^2 = id");
    }

    // load-time cone invariants
    bool nef_in_mov = s.mov.contains(s.nef.r1(), false) && s.mov.contains(s.nef.r2(), false);
    if (!nef_in_mov) error("load", "nef cone is not contained in the movable cone");
    bool aut_preserve = true, bir_preserve = true;
    for (const auto& g : s.gens) {
        const Cone2& c = g.role == "automorphism" ? s.nef : s.mov;
        if (!is_cone_automorphism(g.mat, c)) {
            (g.role == "automorphism" ? aut_preserve : bir_preserve) = false;
            error("load", "generator " + g.name + " = " + g.mat.str() + " does not map the " +
                              (g.role == "automorphism" ? "nef" : "movable") +
                              " cone onto itself");
        }
    }

    bool bir_infinite = generates_infinite_group(bir);
    bool aut_infinite = generates_infinite_group(aut);

    // (a) rational movable ray is incompatible with infinite Bir
    bool mov_rational = s.mov.r1().is_rational() || s.mov.r2().is_rational();
    if (mov_rational && bir_infinite)
        error("a", "a movable boundary ray is rational but the birational action is infinite");

    // (b) rational nef ray, or odd dimension, is incompatible with infinite Aut
    bool nef_rational = s.nef.r1().is_rational() || s.nef.r2().is_rational();
    if (nef_rational && aut_infinite)
        error("b", "a nef boundary ray is rational but the automorphism action is infinite");
    if (s.dimension && *s.dimension % 2 == 1 && aut_infinite)
        error("b", "dimension is odd but the automorphism action is infinite");

    // (c) shared boundary ray forces equal plus parts
    bool shared = s.nef.r1() == s.mov.r1() || s.nef.r1() == s.mov.r2() ||
                  s.nef.r2() == s.mov.r1() || s.nef.r2() == s.mov.r2();
    if (shared) {
        info("a nef boundary ray lies on the movable boundary; equal det +1 parts expected");
        if (aut_preserve && bir_preserve) {
            try {
                GroupProfile pa = classify(aut, s.nef, s.d);
                GroupProfile pb = classify(bir, s.mov, s.d);
                if (!same_plus_part(pa, pb))
                    error("c", "shared boundary ray but the det +1 parts of the two actions "
                               "differ");
            } catch (const std::exception& e) {
                error("c", std::string("classification failed: ") + e.what());
            }
        }
    }

    if (!s.mov.r1().is_rational() && !s.mov.r2().is_rational())
        info("both movable boundary rays are irrational");
    if (s.mov.contains(s.nef.r1(), true) && s.mov.contains(s.nef.r2(), true))
        info("nef cone lies strictly inside the movable cone");

    return out;
}

bool has_errors(const std::vector<Finding>& findings) {
    for (const auto& f : findings)
        if (f.severity == Severity::ERROR) return true;
    return false;
}

std::string findings_report(const std::vector<Finding>& findings) {
    std::string out;
    for (const auto& f : findings) {
        out += std::string(f.severity == Severity::ERROR ? "ERROR" : "INFO") + " (" + f.rule +
               ") " + f.message + "\n";
    }
    if (out.empty()) out = "no findings\n";
    return out;
}

void require_valid(const ActionScenario& s) {
    auto findings = validate_scenario(s);
    if (has_errors(findings))
        throw validation_error("invalid scenario:\n" + findings_report(findings));
}

}  // namespace conelab
