#include "cmhecke/report.hpp"

#include <cstdio>
#include <sstream>

#include "cmhecke/rootnum.hpp"

namespace cmhecke {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

AnalysisRecord analyze(long long D, const NumericsConfig& cfg) {
    AnalysisRecord rec;
    rec.field = build_field(D);
    rec.n_simplest = simplest_count(rec.field);
    if (rec.field.special) return rec;
    for (const auto& spec : simplest_characters(rec.field)) {
        CharacterRow row;
        row.id = spec.id;
        row.order = spec.order;
        row.conductor = conductor_exponents(spec);
        row.dim = classify_simplest(spec);
        row.W = root_number(spec);
        row.ord = (1 - row.W) / 2;
        row.analytic_supported = rec.field.two_case == Ramification2::FourExact;
        if (row.analytic_supported) row.central = vanishing_order(spec, cfg);
        rec.characters.push_back(std::move(row));
    }
    return rec;
}

namespace {

const char* dim_label(const DimensionVerdict& v) {
    switch (v.tag) {
        case DimensionTag::EqualsH: return "h";
        case DimensionTag::TwiceH: return "2h";
        case DimensionTag::ExceedsHUnknown: return "unknown";
    }
    return "?";
}

}  // namespace

std::string to_json(const AnalysisRecord& rec) {
    std::ostringstream os;
    const FieldData& K = rec.field;
    os << "{\"D\": " << K.D << ", \"case\": \"" << case_name(K.two_case) << "\", \"d\": ";
    if (K.d)
        os << *K.d;
    else
        os << "null";
    os << ", \"h\": " << K.h << ", \"r\": " << K.genus_rank << ", \"B\": " << format_double(K.B)
       << ", \"special\": " << (K.special ? "true" : "false") << ", \"n_simplest\": " << rec.n_simplest
       << ", \"characters\": [";
    bool first = true;
    for (const auto& row : rec.characters) {
        if (!first) os << ", ";
        first = false;
        os << "{\"spec\": \"" << row.id << "\", \"order\": " << row.order << ", \"conductor\": {";
        bool cf = true;
        for (const auto& [p, e] : row.conductor) {
            if (!cf) os << ", ";
            cf = false;
            os << "\"" << p << "\": " << e;
        }
        os << "}, \"dim\": \"" << dim_label(row.dim) << "\", \"scalar_restriction\": "
           << (row.dim.scalar_restriction ? "true" : "false") << ", \"W\": " << row.W
           << ", \"ord\": " << row.ord;
        if (row.analytic_supported) {
            const CentralReport& c = *row.central;
            os << ", \"L1\": " << format_double(c.L1) << ", \"Lambda1\": " << format_double(c.Lambda1)
               << ", \"dLambda\": ";
            if (c.LambdaPrime1)
                os << format_double(*c.LambdaPrime1);
            else
                os << "null";
            os << ", \"R\": " << format_double(c.R) << ", \"C1\": " << format_double(c.C1)
               << ", \"C2\": " << format_double(c.C2)
               << ", \"bounds_ok\": " << (c.bounds_ok ? "true" : "false");
        } else {
            os << ", \"L1\": \"unsupported\", \"Lambda1\": \"unsupported\", \"dLambda\": "
                  "\"unsupported\", \"bounds_ok\": \"unsupported\"";
        }
        os << "}";
    }
    os << "]}";
    return os.str();
}

std::string csv_header() {
    return "D,case,d,h,r,B,spec,order,W,ord,L1,dLambda,bounds_ok";
}

std::vector<std::string> to_csv_rows(const AnalysisRecord& rec) {
    std::vector<std::string> rows;
    const FieldData& K = rec.field;
    for (const auto& row : rec.characters) {
        std::ostringstream os;
        os << K.D << "," << case_name(K.two_case) << ",";
        if (K.d) os << *K.d;
        os << "," << K.h << "," << K.genus_rank << "," << format_double(K.B) << "," << row.id << ","
           << row.order << "," << row.W << "," << row.ord << ",";
        if (row.analytic_supported) {
            const CentralReport& c = *row.central;
            os << format_double(c.L1) << ",";
            if (c.LambdaPrime1) os << format_double(*c.LambdaPrime1);
            os << "," << (c.bounds_ok ? "true" : "false");
        } else {
            os << "unsupported,unsupported,unsupported";
        }
        rows.push_back(os.str());
    }
    return rows;
}

}  // namespace cmhecke
