#include "chow/cert_io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace chow {

namespace {

using json = nlohmann::ordered_json;

json statement_to_json(const Statement& st) {
    return json::array({st.n, st.d, st.s, st.t, st.u, st.v});
}

Statement statement_from_json(const json& j) {
    if (!j.is_array() || j.size() != 6)
        throw std::runtime_error("certificate: statement must be a 6-array");
    Statement st;
    st.n = j[0].get<int>();
    st.d = j[1].get<int>();
    st.s = j[2].get<int>();
    st.t = j[3].get<int>();
    st.u = j[4].get<int>();
    st.v = j[5].get<int>();
    return st;
}

json node_to_json(const Certificate& node) {
    json j;
    j["statement"] = statement_to_json(node.statement);
    j["method"] = to_string(node.method);
    if (node.splitting) {
        const Splitting& sp = *node.splitting;
        j["splitting"] = json::array({sp.s[0], sp.s[1], sp.t[0], sp.t[1],
                                      sp.u[0], sp.u[1], sp.v[0], sp.v[1]});
    }
    json kids = json::array();
    for (const CertPtr& child : node.children) kids.push_back(node_to_json(*child));
    j["children"] = std::move(kids);
    if (node.evidence) {
        const CheckOutcome& ev = *node.evidence;
        j["evidence"] = json{{"seed", std::to_string(ev.seed)},
                             {"prime", std::to_string(ev.prime)},
                             {"rank", ev.achieved_rank},
                             {"rows", ev.rows},
                             {"cols", ev.cols},
                             {"trials_used", ev.trials_used}};
    }
    return j;
}

std::uint64_t u64_from_string(const json& j, const char* what) {
    if (!j.is_string())
        throw std::runtime_error(std::string("certificate: ") + what +
                                 " must be a decimal string");
    const std::string& s = j.get_ref<const std::string&>();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw std::runtime_error(std::string("certificate: bad ") + what);
    return std::stoull(s);
}

CertPtr node_from_json(const json& j) {
    if (!j.is_object()) throw std::runtime_error("certificate: node must be an object");
    Certificate node;
    node.statement = statement_from_json(j.at("statement"));
    const auto method = cert_method_from_string(j.at("method").get<std::string>());
    if (!method)
        throw std::runtime_error("certificate: unknown method " +
                                 j.at("method").get<std::string>());
    node.method = *method;
    if (j.contains("splitting")) {
        const json& a = j.at("splitting");
        if (!a.is_array() || a.size() != 8)
            throw std::runtime_error("certificate: splitting must be an 8-array");
        Splitting sp;
        sp.s = {a[0].get<int>(), a[1].get<int>()};
        sp.t = {a[2].get<int>(), a[3].get<int>()};
        sp.u = {a[4].get<int>(), a[5].get<int>()};
        sp.v = {a[6].get<int>(), a[7].get<int>()};
        node.splitting = sp;
    }
    if (j.contains("children"))
        for (const json& kid : j.at("children"))
            node.children.push_back(node_from_json(kid));
    if (j.contains("evidence")) {
        const json& e = j.at("evidence");
        CheckOutcome ev;
        ev.certified = true;
        ev.seed = u64_from_string(e.at("seed"), "evidence seed");
        const std::uint64_t prime = u64_from_string(e.at("prime"), "evidence prime");
        if (prime > UINT32_MAX)
            throw std::runtime_error("certificate: evidence prime out of range");
        ev.prime = static_cast<std::uint32_t>(prime);
        ev.achieved_rank = e.at("rank").get<std::uint64_t>();
        ev.target = ev.achieved_rank;
        ev.trials_used = e.at("trials_used").get<int>();
        ev.rows = e.at("rows").get<std::uint64_t>();
        ev.cols = e.at("cols").get<std::uint64_t>();
        node.evidence = ev;
    }
    return std::make_shared<const Certificate>(std::move(node));
}

}  // namespace

std::string certificate_to_json(const CertificateFile& file, int indent) {
    if (!file.tree) throw std::invalid_argument("certificate_to_json: empty tree");
    json j;
    j["version"] = file.version;
    j["prime"] = std::to_string(file.prime);
    j["root_seed"] = std::to_string(file.root_seed);
    j["statement"] = statement_to_json(file.tree->statement);
    j["tree"] = node_to_json(*file.tree);
    return j.dump(indent);
}

CertificateFile certificate_from_json(const std::string& text) {
    try {
        const json j = json::parse(text);
        CertificateFile file;
        file.version = j.at("version").get<int>();
        if (file.version != 1)
            throw std::runtime_error("certificate: unsupported version");
        const std::uint64_t prime = u64_from_string(j.at("prime"), "prime");
        if (prime > UINT32_MAX)
            throw std::runtime_error("certificate: prime out of range");
        file.prime = static_cast<std::uint32_t>(prime);
        file.root_seed = u64_from_string(j.at("root_seed"), "root_seed");
        file.tree = node_from_json(j.at("tree"));
        if (statement_from_json(j.at("statement")) != file.tree->statement)
            throw std::runtime_error(
                "certificate: top-level statement disagrees with the tree root");
        return file;
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("certificate: malformed input: ") +
                                 e.what());
    }
}

void save_certificate(const std::string& path, const CertificateFile& file) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << certificate_to_json(file) << "\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

CertificateFile load_certificate(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return certificate_from_json(text);
}

}  // namespace chow
