#include "capform/orders.hpp"
#include "capform/jsonio.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace capform {

namespace {
// mirrors data/catalog/N<disc>.json; a test keeps the two in sync
const std::pair<long, const char*> kCatalog[] = {
    {2,
     "{\n  \"algebra\": {\"a\": \"-1\", \"b\": \"-1\"},\n  \"basis\": [\n    [\"1\", \"0\", \"0\", \"0\"],\n    [\"0\", \"1\", \"0\", \"0\"],\n    [\"0\", \"0\", \"1\", \"0\"],\n    [\"1/2\", \"1/2\", \"1/2\", \"1/2\"]\n  ]\n}\n"},
    {3,
     "{\n  \"algebra\": {\"a\": \"-1\", \"b\": \"-3\"},\n  \"basis\": [\n    [\"1\", \"0\", \"0\", \"0\"],\n    [\"0\", \"1\", \"0\", \"0\"],\n    [\"0\", \"1/2\", \"1/2\", \"0\"],\n    [\"1/2\", \"0\", \"0\", \"1/2\"]\n  ]\n}\n"},
    {5,
     "{\n  \"algebra\": {\"a\": \"-2\", \"b\": \"-5\"},\n  \"basis\": [\n    [\"1\", \"0\", \"0\", \"0\"],\n    [\"1/2\", \"0\", \"1/2\", \"1/2\"],\n    [\"0\", \"1/4\", \"1/2\", \"1/4\"],\n    [\"0\", \"0\", \"1\", \"0\"]\n  ]\n}\n"},
    {7,
     "{\n  \"algebra\": {\"a\": \"-1\", \"b\": \"-7\"},\n  \"basis\": [\n    [\"1\", \"0\", \"0\", \"0\"],\n    [\"0\", \"1\", \"0\", \"0\"],\n    [\"0\", \"1/2\", \"1/2\", \"0\"],\n    [\"1/2\", \"0\", \"0\", \"1/2\"]\n  ]\n}\n"},
    {11,
     "{\n  \"algebra\": {\"a\": \"-1\", \"b\": \"-11\"},\n  \"basis\": [\n    [\"1\", \"0\", \"0\", \"0\"],\n    [\"0\", \"1\", \"0\", \"0\"],\n    [\"0\", \"1/2\", \"1/2\", \"0\"],\n    [\"1/2\", \"0\", \"0\", \"1/2\"]\n  ]\n}\n"},
    {13,
     "{\n  \"algebra\": {\"a\": \"-2\", \"b\": \"-13\"},\n  \"basis\": [\n    [\"1\", \"0\", \"0\", \"0\"],\n    [\"1/2\", \"0\", \"1/2\", \"1/2\"],\n    [\"0\", \"1/4\", \"1/2\", \"1/4\"],\n    [\"0\", \"0\", \"1\", \"0\"]\n  ]\n}\n"},
    {30,
     "{\n  \"algebra\": {\"a\": \"-3\", \"b\": \"-10\"},\n  \"basis\": [\n    [\"1\", \"0\", \"0\", \"0\"],\n    [\"1/2\", \"1/2\", \"0\", \"0\"],\n    [\"0\", \"0\", \"1/2\", \"1/2\"],\n    [\"0\", \"0\", \"0\", \"1\"]\n  ]\n}\n"},
};

std::string read_file_or_empty(const std::string& path) {
    std::ifstream in(path);
    if (!in) return {};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* embedded_text(long disc) {
    for (const auto& [n, text] : kCatalog)
        if (n == disc) return text;
    return nullptr;
}

} // namespace

std::vector<long> catalog_levels() {
    return {2, 3, 5, 7, 11, 13, 30};
}

std::string embedded_catalog_text(long disc) {
    const char* text = embedded_text(disc);
    CF_DOMAIN_CHECK(text != nullptr, "no catalog order for discriminant " << disc);
    return text;
}

OrderPtr catalog_order(long disc) {
    std::string text;
    const std::string name = "N" + std::to_string(disc) + ".json";
    if (const char* dir = std::getenv("CAPFORM_CATALOG_DIR")) {
        const std::string path = std::string(dir) + "/" + name;
        text = read_file_or_empty(path);
        CF_DOMAIN_CHECK(!text.empty(), "catalog file not readable: " << path);
    } else {
#ifdef CAPFORM_SOURCE_CATALOG_DIR
        text = read_file_or_empty(std::string(CAPFORM_SOURCE_CATALOG_DIR) + "/" + name);
#endif
        if (text.empty()) text = embedded_catalog_text(disc);
    }
    OrderPtr o = order_from_json_text(text);
    CF_DOMAIN_CHECK(o->disc() == disc,
                    "catalog order has discriminant " << o->disc() << ", expected " << disc);
    const MaximalityCertificate cert = is_maximal(*o);
    CF_DOMAIN_CHECK(cert.maximal,
                    "catalog order for " << disc << " is not maximal (det " << cert.gram_det << ")");
    return o;
}

} // namespace capform
