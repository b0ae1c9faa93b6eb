// hooklab: count, list and verify from the command line.
//
//   hooklab count --shape "3,2/1" --method naruse
//   hooklab list excitations --shape "4,4,3/3,1"
//   hooklab verify main --box 3,3 --trials 3 --seed 42 --json
//
// Exit codes: 0 all checks pass, 1 an identity fails, 2 bad input,
// 3 shape/method mismatch, 4 a sampled instance ran out of admissible points.

#include <hooklab/hooklab.hpp>
#include <hooklab/parallel.hpp>
#include <hooklab/profile_checks.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace hooklab;
using json = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, violated = 1, bad_input = 2, mismatch = 3, exhausted = 4 };

// Thrown for option combinations that parse but do not fit together.
struct usage_mismatch : error {
    using error::error;
};

struct Options {
    bool json = false;
    bool timing = false;
    int jobs = 1;
    std::uint64_t seed = 0;
    int trials = 3;
    int max_resamples = 100;
    bool trials_given = false;

    std::string shape;
    std::string shape_mu;
    std::string box;
    std::string flags;
    bool induced = false;
    int cap = -1;
    std::string method = "enum";
    std::string kind;
    std::string identity;

    int a_max = 5;
    int b_max = 4;
    std::string c_range = "-4,4";
    std::string sizes = "1,2,3,4";
};

json to_json(const Partition& p)
{
    json a = json::array();
    for (int v : p.parts())
        a.push_back(v);
    return a;
}

json to_json(const Tableau& t)
{
    json rows = json::array();
    for (int i = 1; i <= t.outer().length(); ++i) {
        json row = json::array();
        for (int j = 1; j <= t.outer().part(i); ++j)
            row.push_back(t.has({i, j}) ? json(t.at({i, j})) : json(nullptr));
        rows.push_back(row);
    }
    return rows;
}

json to_json(const Diagram& d)
{
    json boxes = json::array();
    for (Box c : d)
        boxes.push_back({c.row, c.col});
    return boxes;
}

std::uint64_t seed_from_env()
{
    const char* s = std::getenv("HOOKLAB_SEED");
    if (!s || !*s)
        return 0;
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &used);
    } catch (const std::exception&) {
        throw parse_error(std::string("HOOKLAB_SEED is not an unsigned integer: ") + s);
    }
    if (s[used] != '\0')
        throw parse_error(std::string("HOOKLAB_SEED is not an unsigned integer: ") + s);
    return v;
}

std::pair<int, int> parse_pair(const std::string& text, const char* what)
{
    auto v = parse_int_list(text);
    if (v.size() != 2)
        throw parse_error(std::string(what) + " needs two comma-separated integers");
    return {v[0], v[1]};
}

SkewShape require_shape(const Options& o)
{
    if (o.shape.empty())
        throw parse_error("--shape is required");
    return parse_skew_shape(o.shape);
}

void require_contained(const SkewShape& s)
{
    if (!contains(s.outer, s.inner))
        throw not_contained(s.inner.to_string() + " is not contained in " + s.outer.to_string());
}

// Prints a JSON array with one compact item per line.
void print_items(const json& items)
{
    if (items.empty()) {
        std::cout << "[]\n";
        return;
    }
    std::cout << "[\n";
    for (std::size_t k = 0; k < items.size(); ++k)
        std::cout << "  " << items[k].dump() << (k + 1 < items.size() ? ",\n" : "\n");
    std::cout << "]\n";
}

// ---------------------------------------------------------------------------
// count
// ---------------------------------------------------------------------------

int run_count(const Options& o)
{
    const SkewShape s = require_shape(o);
    require_contained(s);
    Integer count;
    if (o.method == "enum") {
        count = static_cast<unsigned long>(enumerate_syt(s.outer, s.inner).size());
    } else if (o.method == "naruse") {
        const Rational c = naruse_count(s.outer, s.inner);
        if (!is_integer(c))
            throw identity_violated("naruse count is not an integer: " + to_string(c));
        count = c.get_num();
    } else {
        if (!s.inner.empty())
            throw usage_mismatch("method hlf needs a straight shape");
        const Rational c = hlf_count(s.outer);
        if (!is_integer(c))
            throw identity_violated("hook length count is not an integer: " + to_string(c));
        count = c.get_num();
    }
    if (o.json) {
        json out{{"command", "count"}, {"shape", shape_key(s.outer, s.inner)},
                 {"method", o.method}, {"count", json::parse(count.get_str())}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << count.get_str() << "\n";
    }
    return Exit::ok;
}

// ---------------------------------------------------------------------------
// list
// ---------------------------------------------------------------------------

int run_list(const Options& o)
{
    json items = json::array();
    std::string shape_text;
    if (o.kind == "syt" || o.kind == "excitations") {
        const SkewShape s = require_shape(o);
        require_contained(s);
        shape_text = shape_key(s.outer, s.inner);
        if (o.kind == "syt") {
            for (const Tableau& t : enumerate_syt(s.outer, s.inner))
                items.push_back(to_json(t));
        } else {
            for (const Diagram& d : enumerate_excitations(s.outer, s.inner))
                items.push_back(to_json(d));
        }
    } else if (o.kind == "ssyt") {
        if (o.shape_mu.empty() || o.cap < 0)
            throw parse_error("list ssyt needs --shape-mu and --cap");
        const Partition mu = parse_partition(o.shape_mu);
        shape_text = mu.to_string();
        for (const Tableau& t : enumerate_ssyt(mu, o.cap))
            items.push_back(to_json(t));
    } else {
        Partition mu;
        Flagging b;
        if (o.induced) {
            if (!o.flags.empty())
                throw usage_mismatch("--flags and --induced are exclusive");
            const SkewShape s = require_shape(o);
            require_contained(s);
            mu = s.inner;
            b = induced_flagging(s.outer, s.inner);
            shape_text = shape_key(s.outer, s.inner);
        } else {
            if (o.flags.empty())
                throw parse_error("list fssyt needs --flags or --induced");
            if (o.shape_mu.empty())
                throw parse_error("list fssyt with --flags needs --shape-mu");
            mu = parse_partition(o.shape_mu);
            auto f = parse_int_list(o.flags);
            if (static_cast<int>(f.size()) < mu.length())
                throw usage_mismatch("--flags has fewer entries than mu has rows");
            b = Flagging(std::move(f), Flagging::Tail::constant);
            shape_text = mu.to_string();
        }
        for (const Tableau& t : enumerate_fssyt(mu, b))
            items.push_back(to_json(t));
    }
    if (o.json) {
        json out{{"command", "list"}, {"kind", o.kind}, {"shape", shape_text},
                 {"count", items.size()}, {"items", items}};
        std::cout << out.dump(2) << "\n";
    } else {
        print_items(items);
    }
    return Exit::ok;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct Work {
    std::optional<SkewShape> shape;
    Partition mu;                  // jt only
    std::vector<int> flags;        // jt only
    int size = 0;                  // det-identities only
};

struct Done {
    Report report;
    double elapsed_ms = 0;
};

bool sampled(const std::string& id)
{
    return id == "main" || id == "z-recursion" || id == "rhs-recursion" || id == "w-identities";
}

bool needs_proper_pair(const std::string& id)
{
    return id == "konvalinka" || id == "konvalinka-variant" || id == "z-recursion" ||
           id == "rhs-recursion";
}

std::vector<Work> shape_scope(const Options& o)
{
    std::vector<Work> out;
    if (!o.box.empty() && !o.shape.empty())
        throw usage_mismatch("--shape and --box are exclusive");
    if (!o.box.empty()) {
        const auto [r, c] = parse_pair(o.box, "--box");
        if (r < 0 || c < 0)
            throw parse_error("--box bounds must be nonnegative");
        for (const auto& lam : partitions_in_box(r, c))
            for (const auto& mu : subpartitions(lam))
                if (!(needs_proper_pair(o.identity) && lam == mu))
                    out.push_back({SkewShape{lam, mu}, {}, {}, 0});
        return out;
    }
    const SkewShape s = require_shape(o);
    require_contained(s);
    if (needs_proper_pair(o.identity) && s.outer == s.inner)
        throw usage_mismatch(o.identity + " needs mu strictly inside lambda");
    out.push_back({s, {}, {}, 0});
    return out;
}

std::vector<Work> jt_scope(const Options& o)
{
    std::vector<Work> out;
    if (!o.box.empty()) {
        if (!o.shape_mu.empty() || !o.flags.empty())
            throw usage_mismatch("--box excludes --shape-mu and --flags");
        const auto [r, c] = parse_pair(o.box, "--box");
        if (r < 0 || c < 0 || o.b_max < 0)
            throw parse_error("--box and --b-max must be nonnegative");
        const int n = std::max(r, 1);
        for (const auto& mu : partitions_in_box(r, c)) {
            std::vector<int> b(static_cast<std::size_t>(n), 0);
            auto rec = [&](auto&& self, int i, int lo) -> void {
                if (i == n) {
                    out.push_back({std::nullopt, mu, b, 0});
                    return;
                }
                for (int v = lo; v <= o.b_max; ++v) {
                    b[static_cast<std::size_t>(i)] = v;
                    self(self, i + 1, v);
                }
            };
            rec(rec, 0, 0);
        }
        return out;
    }
    if (o.shape_mu.empty() || o.flags.empty())
        throw parse_error("verify jt needs --box or both --shape-mu and --flags");
    const Partition mu = parse_partition(o.shape_mu);
    auto f = parse_int_list(o.flags);
    if (static_cast<int>(f.size()) < std::max(mu.length(), 1))
        throw usage_mismatch("--flags must have at least len(mu) entries");
    if (!Flagging(f, Flagging::Tail::constant).weakly_increasing())
        throw usage_mismatch("the flagging must be weakly increasing");
    out.push_back({std::nullopt, mu, f, 0});
    return out;
}

std::string flags_key(const std::vector<int>& f)
{
    std::string s;
    for (std::size_t k = 0; k < f.size(); ++k)
        s += (k ? "," : "") + std::to_string(f[k]);
    return s;
}

Report check_jt(const Work& w, std::uint64_t seed)
{
    const int n = static_cast<int>(w.flags.size());
    const Flagging b(w.flags, Flagging::Tail::constant);
    Report r = check_twisted_arrays(w.mu, b, n);
    const std::string key = "mu=" + w.mu.to_string() + " b=" + flags_key(w.flags);

    Rng rng = Rng::for_instance(seed, "jt:" + key);
    std::map<std::pair<int, int>, Rational> table;
    UTable<Rational> u = [&](int i, int j) -> Rational {
        auto [it, fresh] = table.try_emplace({i, j});
        if (fresh)
            it->second = rng.rational();
        return it->second;
    };
    // Draw the whole table up front so the values do not depend on the
    // order in which the two sides read it.
    for (int i = 1; i <= std::max(n, 1) + 4; ++i)
        for (int j = -n - 1; j <= w.mu.part(1) + n + 1; ++j)
            u(i, j);
    const Rational sum = jt_general_sum<Rational>(w.mu, b, u);
    const Rational det = jt_general_det<Rational>(w.mu, b, u, n);
    r.check(sum == det, key + " sum-vs-det",
            "sum=" + to_string(sum) + " det=" + to_string(det));
    return r;
}

Report check_shape(const std::string& id, const SkewShape& s, const Options& o, SchurCache& cache)
{
    const Partition& lam = s.outer;
    const Partition& mu = s.inner;
    const std::string key = shape_key(lam, mu);
    SamplingOptions opt;
    opt.seed = o.seed;
    opt.trials = o.trials;
    opt.max_attempts = o.max_resamples;

    Report r(id);
    if (id == "main") {
        r.add(verify_main(lam, mu, opt));
    } else if (id == "naruse") {
        const Rational c = naruse_count(lam, mu);
        const std::size_t e = enumerate_syt(lam, mu).size();
        r.check(is_integer(c) && c == static_cast<unsigned long>(e), key,
                "formula=" + to_string(c) + " enumeration=" + std::to_string(e));
    } else if (id == "konvalinka") {
        r.merge(konvalinka_check(lam, mu, &cache));
    } else if (id == "konvalinka-variant") {
        r.merge(konvalinka_variant_check(lam, mu, default_cutoff(lam, mu), &cache));
    } else if (id == "z-recursion") {
        r.add(sample_instance(id, key, z_window(lam, mu), opt,
                              [&](const ZPoint& p) { return z_recursion_witness(lam, mu, p); }));
    } else if (id == "rhs-recursion") {
        r.add(sample_instance(id, key, z_window(lam, mu), opt,
                              [&](const ZPoint& p) { return rhs_recursion_witness(lam, mu, p); }));
    } else if (id == "w-identities") {
        const int n = default_cutoff(lam, mu);
        r.add(sample_instance(id, key, {-n, std::max(lam.part(1), 0)}, opt,
                              [&](const ZPoint& p) { return w_identities_witness(lam, mu, n, p); }));
    } else {
        throw usage_mismatch("identity " + id + " is not shape-scoped");
    }
    return r;
}

json instance_json(const InstanceResult& i, const Work& w, const Options& o, double elapsed)
{
    json j;
    if (sampled(i.identity))
        j["theorem"] = i.identity;
    j["identity"] = i.identity;
    j["instance"] = i.instance;
    if (w.shape) {
        j["lambda"] = to_json(w.shape->outer);
        j["mu"] = to_json(w.shape->inner);
    }
    j["status"] = to_string(i.status);
    if (!i.witness.empty())
        j["witness"] = i.witness;
    if (sampled(i.identity)) {
        j["points"] = i.points;
        j["resamples"] = i.resamples;
    }
    if (o.timing)
        j["elapsed_ms"] = elapsed;
    return j;
}

int run_verify(Options o)
{
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    const std::string& id = o.identity;

    std::vector<Work> work;
    if (id == "h-recursions") {
        if (!o.box.empty() || !o.shape.empty())
            throw usage_mismatch("h-recursions takes --a-max, --b-max and --c-range");
        work.push_back({});
    } else if (id == "det-identities") {
        if (!o.box.empty() || !o.shape.empty())
            throw usage_mismatch("det-identities takes --sizes and --trials");
        if (!o.trials_given)
            o.trials = 100;
        for (int n : parse_int_list(o.sizes)) {
            if (n < 1 || n > 10)
                throw parse_error("--sizes entries must lie in [1, 10]");
            work.push_back({std::nullopt, {}, {}, n});
        }
    } else if (id == "jt") {
        work = jt_scope(o);
    } else {
        work = shape_scope(o);
    }
    if (o.trials < 1)
        throw parse_error("--trials must be positive");

    SchurCache cache;
    auto results = parallel_map(work, o.jobs, [&](const Work& w) {
        const auto t0 = clock::now();
        Done d;
        if (id == "h-recursions") {
            const auto [lo, hi] = parse_pair(o.c_range, "--c-range");
            d.report = check_h_recursions(o.a_max, o.b_max, lo, hi);
        } else if (id == "det-identities") {
            d.report = check_det_identities(w.size, o.trials, o.seed);
        } else if (id == "jt") {
            d.report = check_jt(w, o.seed);
        } else {
            d.report = check_shape(id, *w.shape, o, cache);
        }
        d.elapsed_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
        return d;
    });

    std::size_t total = 0, pass = 0, fail = 0, starved = 0;
    json instances = json::array();
    for (std::size_t k = 0; k < work.size(); ++k) {
        for (const auto& i : results[k].report.instances()) {
            ++total;
            pass += i.status == Status::pass;
            fail += i.status == Status::fail;
            starved += i.status == Status::sampling_exhausted;
            if (o.json)
                instances.push_back(instance_json(i, work[k], o, results[k].elapsed_ms));
            else if (i.status != Status::pass)
                std::cout << to_string(i.status) << " " << i.instance << ": " << i.witness << "\n";
        }
    }
    const int code = fail ? Exit::violated : starved ? Exit::exhausted : Exit::ok;

    if (o.json) {
        json out;
        out["command"] = "verify";
        out["identity"] = id;
        out["seed"] = o.seed;
        out["trials"] = o.trials;
        out["status"] = fail ? "fail" : starved ? "sampling_exhausted" : "pass";
        out["summary"] = {{"instances", total}, {"pass", pass}, {"fail", fail},
                          {"sampling_exhausted", starved}};
        out["instances"] = instances;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << id << ": " << total << " instances, " << pass << " pass, " << fail
                  << " fail, " << starved << " sampling_exhausted\n";
    }
    if (o.timing) {
        const double ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();
        std::cerr << "elapsed " << ms << " ms\n";
    }
    return code;
}

} // namespace

int main(int argc, char** argv)
{
    Options o;
    CLI::App app{"Hook length formulas, excitations and flagged Schur polynomials"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", o.json, "Machine-readable output on stdout");
    app.add_flag("--timing", o.timing, "Report elapsed time (stderr, and per instance in JSON)");
    app.add_option("--jobs", o.jobs, "Worker threads for batch runs")->check(CLI::Range(1, 256));

    auto* count = app.add_subcommand("count", "Count standard tableaux of a skew shape");
    count->add_option("--shape", o.shape, "Skew shape, e.g. \"3,2/1\"")->required();
    count->add_option("--method", o.method, "enum | naruse | hlf")
        ->check(CLI::IsMember({"enum", "naruse", "hlf"}));

    auto* list = app.add_subcommand("list", "List tableaux or excitations in canonical order");
    list->add_option("kind", o.kind, "syt | ssyt | fssyt | excitations")
        ->required()
        ->check(CLI::IsMember({"syt", "ssyt", "fssyt", "excitations"}));
    list->add_option("--shape", o.shape, "Skew shape lambda/mu");
    list->add_option("--shape-mu", o.shape_mu, "Straight shape mu for ssyt/fssyt");
    list->add_option("--flags", o.flags, "Row bounds b_1,b_2,... for fssyt");
    list->add_flag("--induced", o.induced, "Use the flagging induced by --shape");
    list->add_option("--cap", o.cap, "Largest entry for ssyt")->check(CLI::NonNegativeNumber);

    std::uint64_t seed = 0;
    auto* verify = app.add_subcommand("verify", "Check an identity over a batch of instances");
    verify->add_option("identity", o.identity)
        ->required()
        ->check(CLI::IsMember({"main", "naruse", "konvalinka", "konvalinka-variant", "jt",
                               "h-recursions", "det-identities", "z-recursion",
                               "rhs-recursion", "w-identities"}));
    verify->add_option("--shape", o.shape, "Single skew shape lambda/mu");
    verify->add_option("--box", o.box, "All lambda in an R x C box and all mu inside");
    auto* trials = verify->add_option("--trials", o.trials, "Random points (or matrices) per instance");
    auto* seed_opt = verify->add_option("--seed", seed, "Seed (default: $HOOKLAB_SEED or 0)");
    verify->add_option("--max-resamples", o.max_resamples, "Draws per point before giving up")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--shape-mu", o.shape_mu, "jt: the partition mu");
    verify->add_option("--flags", o.flags, "jt: the flagging b_1..b_n");
    verify->add_option("--a-max", o.a_max, "h-recursions: largest a");
    verify->add_option("--b-max", o.b_max, "h-recursions: largest b; jt: largest flag");
    verify->add_option("--c-range", o.c_range, "h-recursions: lo,hi for c");
    verify->add_option("--sizes", o.sizes, "det-identities: matrix sizes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Exit::ok : Exit::bad_input;
    }

    try {
        o.trials_given = trials->count() > 0;
        o.seed = seed_opt->count() ? seed : seed_from_env();
        if (*count)
            return run_count(o);
        if (*list)
            return run_list(o);
        return run_verify(o);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::bad_input;
    } catch (const not_a_partition& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::bad_input;
    } catch (const identity_violated& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::violated;
    } catch (const error& e) {
        // Containment, cutoffs, option combinations: the input parses but
        // does not fit the request.
        std::cerr << "error: " << e.what() << "\n";
        return Exit::mismatch;
    }
}
