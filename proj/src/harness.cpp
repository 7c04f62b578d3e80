#include "nct/harness.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "nct/nctorus.hpp"

namespace nct {

namespace {

using ordered_json = nlohmann::ordered_json;

Rat parse_rational_field(const std::string& text, const char* field) {
    SurdOrRational v;
    try {
        v = parse_surd_literal(text);
    } catch (const syntax_error& e) {
        throw schema_error(field, std::string("not a rational: ") + e.what());
    }
    if (const auto* r = std::get_if<Rat>(&v)) return *r;
    throw schema_error(field, "expected a rational, got a surd");
}

CurveRecord record_from_json(const ordered_json& obj) {
    if (!obj.is_object()) throw schema_error("(record)", "expected a JSON object");
    static const std::set<std::string> known = {"label", "cm_d",   "form",
                                                "rank",  "rank_source", "lambda", "notes"};
    for (const auto& item : obj.items())
        if (!known.count(item.key())) throw schema_error(item.key(), "unknown key");
    for (const char* key : {"label", "cm_d", "form", "rank", "rank_source"})
        if (!obj.contains(key)) throw schema_error(key, "missing");

    if (!obj["label"].is_string()) throw schema_error("label", "expected a string");
    std::string label = obj["label"].get<std::string>();
    if (label.empty()) throw schema_error("label", "empty");

    if (!obj["cm_d"].is_number_integer()) throw schema_error("cm_d", "expected an integer");
    long long cm_d = obj["cm_d"].get<long long>();
    if (cm_d <= 0) throw schema_error("cm_d", "must be positive");

    if (!obj["form"].is_string()) throw schema_error("form", "expected \"sqrt\" or \"half\"");
    std::string form_text = obj["form"].get<std::string>();
    OrderForm form;
    if (form_text == "sqrt")
        form = OrderForm::sqrt_form;
    else if (form_text == "half")
        form = OrderForm::half_form;
    else
        throw schema_error("form", "expected \"sqrt\" or \"half\", got \"" + form_text + "\"");

    if (!obj["rank"].is_number_integer()) throw schema_error("rank", "expected an integer");
    long long rank = obj["rank"].get<long long>();
    if (rank < 0) throw schema_error("rank", "negative");

    if (!obj["rank_source"].is_string()) throw schema_error("rank_source", "expected a string");
    std::string rank_source = obj["rank_source"].get<std::string>();
    if (rank_source.empty()) throw schema_error("rank_source", "empty: rank provenance is mandatory");

    CmOrder order = [&] {
        try {
            return CmOrder(Int(static_cast<long>(cm_d)), form);
        } catch (const invalid_order_error& e) {
            throw schema_error("cm_d", e.what());
        }
    }();

    CurveRecord rec{std::move(label), std::move(order), static_cast<long>(rank),
                    std::move(rank_source), std::nullopt, std::nullopt};
    if (obj.contains("lambda")) {
        if (!obj["lambda"].is_string()) throw schema_error("lambda", "expected a string rational");
        rec.lambda = parse_rational_field(obj["lambda"].get<std::string>(), "lambda");
    }
    if (obj.contains("notes")) {
        if (!obj["notes"].is_string()) throw schema_error("notes", "expected a string");
        rec.notes = obj["notes"].get<std::string>();
    }
    return rec;
}

}  // namespace

std::vector<CurveRecord> parse_dataset(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw dataset_parse_error(e.what(), e.byte);
    }
    if (!doc.is_array()) throw schema_error("(document)", "expected a JSON array of records");

    std::vector<CurveRecord> records;
    std::set<std::string> labels;
    for (const auto& obj : doc) {
        CurveRecord rec = record_from_json(obj);
        if (!labels.insert(rec.label).second)
            throw duplicate_label_error("duplicate label \"" + rec.label + "\"");
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<CurveRecord> load_dataset(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw dataset_io_error("cannot open dataset file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_dataset(buf.str());
}

std::string dataset_to_json(const std::vector<CurveRecord>& records) {
    ordered_json doc = ordered_json::array();
    for (const CurveRecord& rec : records) {
        ordered_json obj;
        obj["label"] = rec.label;
        obj["cm_d"] = rec.order.d().get_si();
        obj["form"] = rec.order.form() == OrderForm::sqrt_form ? "sqrt" : "half";
        obj["rank"] = rec.rank;
        obj["rank_source"] = rec.rank_source;
        if (rec.lambda) obj["lambda"] = rec.lambda->get_str();
        if (rec.notes) obj["notes"] = *rec.notes;
        doc.push_back(std::move(obj));
    }
    return doc.dump(2) + "\n";
}

Rat j_invariant_lambda(const Rat& lambda, JConstant constant) {
    if (lambda == 0 || lambda == 1)
        throw singular_lambda_error("lambda = " + lambda.get_str() + " degenerates the cubic");
    Rat c(constant == JConstant::standard_256 ? 256 : 64);
    Rat t = lambda * lambda - lambda + 1;
    Rat den = lambda * lambda * (lambda - 1) * (lambda - 1);
    return c * t * t * t / den;
}

std::vector<ConjectureRow> conjecture_report(const std::vector<CurveRecord>& records) {
    std::vector<ConjectureRow> rows;
    rows.reserve(records.size());
    for (const CurveRecord& rec : records) {
        ConjectureRow row;
        row.label = rec.label;
        row.known_rank = rec.rank;
        try {
            RealMultiplication rm = real_multiplication_theta(rec.order);
            NcTorus torus(rm.theta);
            row.theta = rm.theta.str();
            row.generator = std::move(rm.generator);
            row.complexity = arithmetic_complexity(torus);
            row.predicted_rank = static_cast<long>(row.complexity) - 1;
            row.agrees = row.predicted_rank == row.known_rank;
        } catch (const error& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string report_to_json(const std::vector<ConjectureRow>& rows) {
    ordered_json doc = ordered_json::array();
    for (const ConjectureRow& row : rows) {
        ordered_json obj;
        obj["label"] = row.label;
        if (row.error) {
            obj["error"] = *row.error;
        } else {
            obj["theta"] = row.theta;
            obj["generator"] = row.generator;
            obj["complexity"] = row.complexity;
            obj["predicted_rank"] = row.predicted_rank;
            obj["known_rank"] = row.known_rank;
            obj["agrees"] = row.agrees;
        }
        doc.push_back(std::move(obj));
    }
    return doc.dump(2) + "\n";
}

std::string report_to_tsv(const std::vector<ConjectureRow>& rows) {
    std::string out = "label\ttheta\tgenerator\tcomplexity\tpredicted_rank\tknown_rank\tagrees\n";
    for (const ConjectureRow& row : rows) {
        out += row.label;
        if (row.error) {
            out += "\terror: " + *row.error + "\t-\t-\t-\t" + std::to_string(row.known_rank) + "\t-\n";
            continue;
        }
        out += "\t" + row.theta + "\t" + row.generator + "\t" + std::to_string(row.complexity) +
               "\t" + std::to_string(row.predicted_rank) + "\t" + std::to_string(row.known_rank) +
               "\t" + (row.agrees ? "true" : "false") + "\n";
    }
    return out;
}

}  // namespace nct
