#include "hopfwave/serialize.hpp"

#include <cstdio>

namespace hopfwave {

std::string format_sig(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

Json term_list_json(const Polynomial& p) {
    Json arr = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json t;
        t["exp"] = {m.e[0], m.e[1], m.e[2], m.e[3]};
        t["re"] = c.re.get_str();
        t["im"] = c.im.get_str();
        arr.push_back(std::move(t));
    }
    return arr;
}

Json operator_json(const WeylOperator& a) {
    Json arr = Json::array();
    for (const auto& [d, coeff] : a.terms()) {
        Json t;
        t["deriv"] = {d.e[0], d.e[1], d.e[2], d.e[3]};
        t["coeff"] = term_list_json(coeff);
        arr.push_back(std::move(t));
    }
    return arr;
}

Json table_report_json(const TableReport& rep) {
    Json out;
    out["table"] = rep.table;
    out["all_pass"] = rep.all_pass();
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
        Json j;
        j["identity"] = e.name;
        j["status"] = e.pass ? "pass" : "fail";
        j["residual"] = operator_json(e.residual);
        if (!e.note.empty()) j["note"] = e.note;
        entries.push_back(std::move(j));
    }
    out["entries"] = std::move(entries);
    return out;
}

Json ket_json(const Ket& k, bool normalized) {
    Json out;
    out["j"] = to_string(k.j);
    out["m"] = to_string(k.m);
    out["norm_factor"] = to_string(k.norm);
    out["body"] = term_list_json(k.body);
    if (normalized) {
        // 1/(q sqrt(s)) = (1/(q s)) sqrt(s): still one exact radical prefactor
        RadicalScalar inv(Rational(1) / (k.norm.coefficient() * Rational(k.norm.radicand())),
                          Rational(k.norm.radicand()));
        out["normalized_prefactor"] = to_string(inv);
    }
    return out;
}

Json multiplet_json(const Multiplet& m, bool normalized) {
    Json out;
    out["j"] = to_string(m.j);
    out["direction"] = m.direction == BuildFrom::Bottom ? "from_bottom" : "from_top";
    Json kets = Json::array();
    for (auto it = m.kets.rbegin(); it != m.kets.rend(); ++it) // display m descending
        kets.push_back(ket_json(*it, normalized));
    out["kets"] = std::move(kets);
    return out;
}

Json sweep_report_json(const SweepReport& rep) {
    Json out;
    out["j_max"] = to_string(rep.j_max);
    out["samples"] = rep.samples;
    out["seed"] = rep.seed;
    out["fd_step"] = format_sig(rep.fd_step);
    Json tags = Json::array();
    for (const auto& t : rep.tags) {
        Json j;
        j["tag"] = gen_name(t.tag);
        j["points"] = t.points;
        j["max_rel_err"] = format_sig(t.max_rel_err);
        tags.push_back(std::move(j));
    }
    out["tags"] = std::move(tags);
    out["max_rel_err"] = format_sig(rep.max_rel_err());
    return out;
}

Json residual_report_json(const ResidualReport& rep) {
    Json out;
    out["j"] = to_string(rep.j);
    out["m"] = to_string(rep.m);
    out["energy"] = format_sig(rep.energy);
    out["samples"] = rep.samples;
    out["seed"] = rep.seed;
    out["fd_step"] = format_sig(rep.fd_step);
    out["max_rel_residual"] = format_sig(rep.max_rel_residual);
    out["skipped_points"] = rep.skipped_points;
    out["units"] = {{"hbar", format_sig(rep.units.hbar)},
                    {"mu", format_sig(rep.units.mu)},
                    {"q", format_sig(rep.units.q)}};
    return out;
}

std::string multiplet_csv(const Multiplet& m) {
    std::string out = "j,m,a,b,c,d,coeff_re,coeff_im,norm_factor\n";
    for (auto it = m.kets.rbegin(); it != m.kets.rend(); ++it) {
        for (const auto& [mon, c] : it->body.terms()) {
            out += to_string(it->j) + "," + to_string(it->m) + "," +
                   std::to_string(mon.e[0]) + "," + std::to_string(mon.e[1]) + "," +
                   std::to_string(mon.e[2]) + "," + std::to_string(mon.e[3]) + "," +
                   c.re.get_str() + "," + c.im.get_str() + "," + to_string(it->norm) + "\n";
        }
    }
    return out;
}

namespace {

std::string latex_rational(const Rational& q, bool wrap_negative = false) {
    std::string num = q.get_num().get_str();
    if (q.get_den() == 1) {
        if (wrap_negative && q < 0) return "(" + num + ")";
        return num;
    }
    std::string body = "\\tfrac{" + (q < 0 ? num.substr(1) : num) + "}{" +
                       q.get_den().get_str() + "}";
    return q < 0 ? "-" + body : body;
}

const char* latex_var(int idx) {
    static const char* names[4] = {"z_1", "z_2", "\\bar{z}_1", "\\bar{z}_2"};
    return names[idx];
}

std::string latex_monomial(const Monomial& m) {
    std::string out;
    for (int v = 0; v < 4; ++v) {
        if (m.e[v] == 0) continue;
        out += latex_var(v);
        if (m.e[v] > 1) out += "^{" + std::to_string(m.e[v]) + "}";
        out += " ";
    }
    if (!out.empty()) out.pop_back();
    return out;
}

std::string latex_half(int twice) { // renders twice/2
    if (twice % 2 == 0) return std::to_string(twice / 2);
    std::string s = std::to_string(std::abs(twice));
    return std::string(twice < 0 ? "-" : "") + "\\tfrac{" + s + "}{2}";
}

} // namespace

std::string latex_scalar(const GaussianRational& c) {
    if (c.im == 0) return latex_rational(c.re);
    std::string im = latex_rational(c.im) + "i";
    if (c.im == 1) im = "i";
    if (c.im == -1) im = "-i";
    if (c.re == 0) return im;
    return latex_rational(c.re) + (c.im > 0 ? "+" : "") + im;
}

std::string latex_radical(const RadicalScalar& a) {
    if (a.is_rational()) return latex_rational(a.coefficient());
    std::string root = "\\sqrt{" + a.radicand().get_str() + "}";
    if (a.coefficient() == 1) return root;
    if (a.coefficient() == -1) return "-" + root;
    return latex_rational(a.coefficient()) + root;
}

std::string latex_polynomial(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        std::string coeff = latex_scalar(c);
        std::string mono = m.total_degree() == 0 ? "" : latex_monomial(m);
        std::string piece;
        if (mono.empty())
            piece = coeff;
        else if (c == GaussianRational(1))
            piece = mono;
        else if (c == GaussianRational(-1))
            piece = "-" + mono;
        else if (c.is_real() || c.re == 0)
            piece = coeff + " " + mono;
        else
            piece = "(" + coeff + ") " + mono;
        if (!first && piece[0] != '-') out += " + ";
        else if (!first) {
            out += " - ";
            piece = piece.substr(1);
        }
        out += piece;
        first = false;
    }
    return out;
}

std::string latex_euler_form(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        int deg = int(m.total_degree());
        int twice_lz = int(m.e[0]) - int(m.e[1]) - int(m.e[2]) + int(m.e[3]);
        int twice_psi = m.holomorphic_imbalance();
        unsigned cpow = m.e[0] + m.e[2], spow = m.e[1] + m.e[3];

        std::string piece;
        if (!(c == GaussianRational(1)))
            piece += (c == GaussianRational(-1)) ? "-" : "(" + latex_scalar(c) + ")\\, ";
        if (deg > 0) piece += "r^{" + latex_half(deg) + "} ";
        if (twice_lz != 0 || twice_psi != 0) {
            auto angle_coeff = [](int twice) {
                std::string c = latex_half(twice);
                if (c == "1") return std::string();
                if (c == "-1") return std::string("-");
                return c;
            };
            piece += "e^{i(";
            if (twice_lz != 0) piece += angle_coeff(twice_lz) + "\\phi";
            if (twice_psi != 0)
                piece += (twice_lz != 0 && twice_psi > 0 ? "+" : "") + angle_coeff(twice_psi) +
                         "\\psi";
            piece += ")} ";
        }
        if (cpow) {
            piece += "\\cos";
            if (cpow > 1) piece += "^{" + std::to_string(cpow) + "}";
            piece += "\\!\\tfrac{\\theta}{2} ";
        }
        if (spow) {
            piece += "\\sin";
            if (spow > 1) piece += "^{" + std::to_string(spow) + "}";
            piece += "\\!\\tfrac{\\theta}{2} ";
        }
        if (piece.empty() || piece == "-") piece += "1";
        if (!piece.empty() && piece.back() == ' ') piece.pop_back();

        if (!first && piece[0] != '-') out += " + ";
        else if (!first) {
            out += " - ";
            piece = piece.substr(1);
        }
        out += piece;
        first = false;
    }
    return out;
}

std::string multiplet_latex(const Multiplet& m, bool normalized) {
    std::string out;
    for (auto it = m.kets.rbegin(); it != m.kets.rend(); ++it) {
        const Ket& k = *it;
        out += "$|" + latex_half(k.j.twice) + "," + latex_half(k.m.twice) + "\\rangle = ";
        if (normalized && !(k.norm == RadicalScalar::one())) {
            RadicalScalar inv(Rational(1) / (k.norm.coefficient() * Rational(k.norm.radicand())),
                              Rational(k.norm.radicand()));
            out += latex_radical(inv) + "\\left(" + latex_polynomial(k.body) + "\\right) = " +
                   latex_radical(inv) + "\\left(" + latex_euler_form(k.body) + "\\right)$\n";
        } else {
            out += latex_polynomial(k.body) + " = " + latex_euler_form(k.body) + "$\n";
        }
    }
    return out;
}

} // namespace hopfwave
