#include "planforge/pddl/parser.h"

#include <algorithm>
#include <map>
#include <set>

namespace planforge::pddl {

namespace {

const std::set<std::string> kSupportedRequirements = {
    ":strips", ":typing", ":negative-preconditions", ":equality"};

class Cursor {
public:
    explicit Cursor(const TokenStream& tokens) : tokens_(tokens) {}

    bool at_end() const { return pos_ >= tokens_.size(); }

    const Token& peek() const {
        if (at_end())
            throw ParseError(last_pos(), "unexpected end of input");
        return tokens_[pos_];
    }

    const Token& next() {
        const Token& t = peek();
        ++pos_;
        return t;
    }

    bool peek_is(Token::Kind kind) const { return !at_end() && tokens_[pos_].kind == kind; }

    bool peek_is(Token::Kind kind, const std::string& text) const {
        return !at_end() && tokens_[pos_].kind == kind && tokens_[pos_].text == text;
    }

    void expect(Token::Kind kind, const char* what) {
        if (!peek_is(kind))
            throw ParseError(pos_of(peek()), std::string("expected ") + what + ", got '" +
                                                 peek().text + "'");
        ++pos_;
    }

    std::string expect_symbol(const char* what) {
        if (!peek_is(Token::Kind::symbol))
            throw ParseError(pos_of(peek()), std::string("expected ") + what + ", got '" +
                                                 peek().text + "'");
        return next().text;
    }

    SourcePos pos_of(const Token& t) const { return {t.line, t.column}; }

    SourcePos last_pos() const {
        if (tokens_.empty())
            return {1, 1};
        const Token& t = tokens_.back();
        return {t.line, t.column + static_cast<int>(t.text.size())};
    }

private:
    const TokenStream& tokens_;
    size_t pos_ = 0;
};

// Parses "name+ [- type]" groups until the closing paren (not consumed).
// keyword selects whether entries are symbols or ?variables.
std::vector<TypedName> parse_typed_list(Cursor& cur, Token::Kind entry_kind) {
    std::vector<TypedName> result;
    std::vector<size_t> untyped;
    while (!cur.peek_is(Token::Kind::rparen)) {
        if (cur.peek_is(Token::Kind::symbol, "-")) {
            SourcePos pos = cur.pos_of(cur.peek());
            cur.next();
            if (cur.peek_is(Token::Kind::lparen))
                throw ParseError(cur.pos_of(cur.peek()),
                                 "compound types such as (either ...) are not supported");
            std::string type = cur.expect_symbol("type name");
            if (untyped.empty())
                throw ParseError(pos, "dangling '-' with no names before it");
            for (size_t idx : untyped)
                result[idx].type = type;
            untyped.clear();
        } else if (cur.peek_is(entry_kind)) {
            untyped.push_back(result.size());
            result.push_back({cur.next().text, "object"});
        } else {
            throw ParseError(cur.pos_of(cur.peek()),
                             "expected name or ')' in typed list, got '" + cur.peek().text + "'");
        }
    }
    return result;
}

Atom parse_atom_body(Cursor& cur, const std::string& head) {
    Atom atom;
    atom.predicate = head;
    while (!cur.peek_is(Token::Kind::rparen)) {
        if (cur.peek_is(Token::Kind::symbol) || cur.peek_is(Token::Kind::variable))
            atom.args.push_back(cur.next().text);
        else
            throw ParseError(cur.pos_of(cur.peek()),
                             "expected term or ')', got '" + cur.peek().text + "'");
    }
    cur.expect(Token::Kind::rparen, "')'");
    return atom;
}

// Parses a goal description restricted to conjunctions of (possibly negated)
// atoms. Returns the flattened literal list.
void parse_condition(Cursor& cur, std::vector<Literal>& out, bool allow_negation) {
    SourcePos start = cur.pos_of(cur.peek());
    cur.expect(Token::Kind::lparen, "'('");
    if (cur.peek_is(Token::Kind::rparen)) {  // "()" — empty conjunction
        cur.next();
        return;
    }
    const Token& head_tok = cur.peek();
    std::string head = head_tok.text;
    if (head_tok.kind != Token::Kind::symbol)
        throw ParseError(cur.pos_of(head_tok), "expected formula head, got '" + head + "'");
    if (head == "and") {
        cur.next();
        while (!cur.peek_is(Token::Kind::rparen))
            parse_condition(cur, out, allow_negation);
        cur.expect(Token::Kind::rparen, "')'");
        return;
    }
    if (head == "not") {
        if (!allow_negation)
            throw ParseError(start, "negation is not allowed here");
        cur.next();
        std::vector<Literal> inner;
        parse_condition(cur, inner, false);
        if (inner.size() != 1)
            throw ParseError(start, "'not' requires exactly one atom");
        inner[0].positive = false;
        out.push_back(std::move(inner[0]));
        cur.expect(Token::Kind::rparen, "')'");
        return;
    }
    if (head == "or" || head == "imply" || head == "forall" || head == "exists" ||
        head == "when")
        throw ParseError(start, "'" + head + "' is outside the supported fragment");
    cur.next();
    out.push_back({parse_atom_body(cur, head), true});
}

struct SymbolTables {
    const DomainAst* domain = nullptr;
    std::map<std::string, size_t> predicates;  // name -> arity

    explicit SymbolTables(const DomainAst& d) : domain(&d) {
        for (const PredicateDecl& p : d.predicates)
            predicates[p.name] = p.params.size();
    }
};

void check_requirements(Cursor& cur, std::set<std::string>& requirements) {
    while (!cur.peek_is(Token::Kind::rparen)) {
        const Token& t = cur.peek();
        if (t.kind != Token::Kind::keyword)
            throw ParseError(cur.pos_of(t), "expected requirement flag, got '" + t.text + "'");
        if (!kSupportedRequirements.count(t.text))
            throw UnsupportedRequirement(cur.pos_of(t), t.text);
        requirements.insert(t.text);
        cur.next();
    }
    cur.expect(Token::Kind::rparen, "')'");
}

// Checks every atom of an action body: known predicate, correct arity,
// variables declared as parameters, constants declared in the domain.
void check_schema_literals(const std::vector<Literal>& literals, const ActionSchema& action,
                           const DomainAst& domain, const std::map<std::string, size_t>& preds,
                           SourcePos pos, bool allow_equality) {
    std::set<std::string> params;
    for (const TypedName& p : action.params)
        params.insert(p.name);
    std::set<std::string> constants;
    for (const TypedName& c : domain.constants)
        constants.insert(c.name);

    for (const Literal& lit : literals) {
        const Atom& atom = lit.atom;
        if (atom.predicate == "=") {
            if (!allow_equality)
                throw ParseError(pos, "equality atom not allowed in action effect");
            if (atom.args.size() != 2)
                throw ParseError(pos, "'=' takes exactly two terms");
        } else {
            auto it = preds.find(atom.predicate);
            if (it == preds.end())
                throw ParseError(pos, "unknown predicate '" + atom.predicate + "' in action '" +
                                          action.name + "'");
            if (it->second != atom.args.size())
                throw ParseError(pos, "predicate '" + atom.predicate + "' expects " +
                                          std::to_string(it->second) + " arguments");
        }
        for (const std::string& arg : atom.args) {
            if (arg.front() == '?') {
                if (!params.count(arg))
                    throw ParseError(pos, "variable '" + arg + "' is not a parameter of '" +
                                              action.name + "'");
            } else if (!constants.count(arg)) {
                throw ParseError(pos, "constant '" + arg + "' is not declared in the domain");
            }
        }
    }
}

ActionSchema parse_action(Cursor& cur, const DomainAst& domain,
                          const std::map<std::string, size_t>& preds) {
    ActionSchema action;
    SourcePos pos = cur.pos_of(cur.peek());
    action.name = cur.expect_symbol("action name");

    bool saw_effect = false;
    while (!cur.peek_is(Token::Kind::rparen)) {
        const Token& t = cur.peek();
        if (t.kind != Token::Kind::keyword)
            throw ParseError(cur.pos_of(t), "expected action section keyword, got '" + t.text +
                                                "'");
        std::string section = cur.next().text;
        if (section == ":parameters") {
            cur.expect(Token::Kind::lparen, "'('");
            action.params = parse_typed_list(cur, Token::Kind::variable);
            cur.expect(Token::Kind::rparen, "')'");
            std::set<std::string> names;
            for (const TypedName& p : action.params)
                if (!names.insert(p.name).second)
                    throw ParseError(pos, "duplicate parameter '" + p.name + "' in action '" +
                                              action.name + "'");
        } else if (section == ":precondition") {
            parse_condition(cur, action.precondition, true);
        } else if (section == ":effect") {
            saw_effect = true;
            parse_condition(cur, action.effect, true);
        } else {
            throw ParseError(cur.pos_of(t), "unknown action section '" + section + "'");
        }
    }
    cur.expect(Token::Kind::rparen, "')'");

    if (!saw_effect)
        throw ParseError(pos, "action '" + action.name + "' has no :effect");

    check_schema_literals(action.precondition, action, domain, preds, pos, true);
    check_schema_literals(action.effect, action, domain, preds, pos, false);

    // Reject effects that state an atom both positively and negatively.
    std::set<Atom> added, deleted;
    for (const Literal& lit : action.effect) {
        if (lit.positive)
            added.insert(lit.atom);
        else
            deleted.insert(lit.atom);
    }
    for (const Atom& a : added)
        if (deleted.count(a))
            throw ParseError(pos, "atom occurs both positively and negatively in effect of '" +
                                      action.name + "'");
    return action;
}

void verify_type_hierarchy(const DomainAst& domain) {
    std::map<std::string, std::string> declared;
    for (const auto& [type, super] : domain.types) {
        if (type == "object" && super != "object")
            throw ParseError({0, 0}, "root type 'object' cannot have a parent");
        auto it = declared.find(type);
        if (it != declared.end() && it->second != super)
            throw ParseError({0, 0}, "type '" + type + "' declared with conflicting parents");
        declared[type] = super;
    }
    // Types mentioned only as parents implicitly descend from "object".
    for (const auto& [type, _] : declared) {
        std::set<std::string> seen;
        std::string walk = type;
        while (walk != "object") {
            if (!seen.insert(walk).second)
                throw ParseError({0, 0}, "type hierarchy contains a cycle at '" + walk + "'");
            auto it = declared.find(walk);
            if (it == declared.end())
                break;
            walk = it->second;
        }
    }
}

}  // namespace

DomainAst parse_domain(const TokenStream& tokens) {
    Cursor cur(tokens);
    DomainAst domain;

    cur.expect(Token::Kind::lparen, "'('");
    if (cur.expect_symbol("'define'") != "define")
        throw ParseError(cur.last_pos(), "expected 'define'");
    cur.expect(Token::Kind::lparen, "'('");
    if (cur.expect_symbol("'domain'") != "domain")
        throw ParseError(cur.last_pos(), "expected 'domain'");
    domain.name = cur.expect_symbol("domain name");
    cur.expect(Token::Kind::rparen, "')'");

    std::map<std::string, size_t> preds;

    while (!cur.peek_is(Token::Kind::rparen)) {
        cur.expect(Token::Kind::lparen, "'('");
        const Token& head = cur.peek();
        if (head.kind != Token::Kind::keyword)
            throw ParseError(cur.pos_of(head),
                             "expected domain section keyword, got '" + head.text + "'");
        std::string section = cur.next().text;
        if (section == ":requirements") {
            check_requirements(cur, domain.requirements);
        } else if (section == ":types") {
            std::vector<TypedName> entries = parse_typed_list(cur, Token::Kind::symbol);
            cur.expect(Token::Kind::rparen, "')'");
            for (const TypedName& e : entries)
                domain.types.emplace_back(e.name, e.type);
        } else if (section == ":constants") {
            std::vector<TypedName> entries = parse_typed_list(cur, Token::Kind::symbol);
            cur.expect(Token::Kind::rparen, "')'");
            for (TypedName& e : entries)
                domain.constants.push_back(std::move(e));
        } else if (section == ":predicates") {
            while (!cur.peek_is(Token::Kind::rparen)) {
                cur.expect(Token::Kind::lparen, "'('");
                PredicateDecl decl;
                SourcePos pos = cur.pos_of(cur.peek());
                decl.name = cur.expect_symbol("predicate name");
                decl.params = parse_typed_list(cur, Token::Kind::variable);
                cur.expect(Token::Kind::rparen, "')'");
                if (preds.count(decl.name))
                    throw ParseError(pos, "duplicate predicate '" + decl.name + "'");
                preds[decl.name] = decl.params.size();
                domain.predicates.push_back(std::move(decl));
            }
            cur.expect(Token::Kind::rparen, "')'");
        } else if (section == ":action") {
            ActionSchema action = parse_action(cur, domain, preds);
            for (const ActionSchema& existing : domain.actions)
                if (existing.name == action.name)
                    throw ParseError(cur.last_pos(), "duplicate action '" + action.name + "'");
            domain.actions.push_back(std::move(action));
        } else if (kSupportedRequirements.count(section)) {
            throw ParseError(cur.pos_of(head), "misplaced requirement flag '" + section + "'");
        } else {
            // A well-formed section we do not handle (:functions,
            // :durative-action, ...) marks the input as out of fragment.
            throw UnsupportedRequirement(cur.pos_of(head), section);
        }
    }
    cur.expect(Token::Kind::rparen, "')'");
    if (!cur.at_end())
        throw ParseError(cur.pos_of(cur.peek()), "trailing input after domain definition");

    verify_type_hierarchy(domain);
    return domain;
}

ProblemAst parse_problem(const TokenStream& tokens, const DomainAst& domain) {
    Cursor cur(tokens);
    ProblemAst problem;
    SymbolTables tables(domain);

    cur.expect(Token::Kind::lparen, "'('");
    if (cur.expect_symbol("'define'") != "define")
        throw ParseError(cur.last_pos(), "expected 'define'");
    cur.expect(Token::Kind::lparen, "'('");
    if (cur.expect_symbol("'problem'") != "problem")
        throw ParseError(cur.last_pos(), "expected 'problem'");
    problem.name = cur.expect_symbol("problem name");
    cur.expect(Token::Kind::rparen, "')'");

    std::set<std::string> known_types = {"object"};
    for (const auto& [type, super] : domain.types) {
        known_types.insert(type);
        known_types.insert(super);
    }
    std::set<std::string> known_constants;
    for (const TypedName& c : domain.constants)
        known_constants.insert(c.name);

    bool saw_init = false;
    bool saw_goal = false;

    auto check_ground_atom = [&](const Atom& atom, SourcePos pos) {
        if (atom.predicate == "=")
            throw ParseError(pos, "equality atoms are not allowed in init or goal");
        auto it = tables.predicates.find(atom.predicate);
        if (it == tables.predicates.end())
            throw TypeError(pos, "unknown predicate '" + atom.predicate + "'");
        if (it->second != atom.args.size())
            throw TypeError(pos, "predicate '" + atom.predicate + "' expects " +
                                     std::to_string(it->second) + " arguments");
        for (const std::string& arg : atom.args) {
            if (arg.front() == '?')
                throw TypeError(pos, "variable '" + arg + "' in ground atom");
            if (!known_constants.count(arg))
                throw TypeError(pos, "object '" + arg + "' is not declared");
        }
    };

    while (!cur.peek_is(Token::Kind::rparen)) {
        cur.expect(Token::Kind::lparen, "'('");
        const Token& head = cur.peek();
        if (head.kind != Token::Kind::keyword)
            throw ParseError(cur.pos_of(head),
                             "expected problem section keyword, got '" + head.text + "'");
        SourcePos section_pos = cur.pos_of(head);
        std::string section = cur.next().text;
        if (section == ":domain") {
            std::string name = cur.expect_symbol("domain name");
            cur.expect(Token::Kind::rparen, "')'");
            if (name != domain.name)
                throw DomainMismatch(section_pos, "problem requires domain '" + name +
                                                      "' but '" + domain.name + "' was given");
            problem.domain_name = name;
        } else if (section == ":requirements") {
            std::set<std::string> reqs;
            check_requirements(cur, reqs);
        } else if (section == ":objects") {
            problem.objects = parse_typed_list(cur, Token::Kind::symbol);
            cur.expect(Token::Kind::rparen, "')'");
            for (const TypedName& obj : problem.objects) {
                if (!known_types.count(obj.type))
                    throw TypeError(section_pos,
                                    "object '" + obj.name + "' has unknown type '" + obj.type +
                                        "'");
                if (!known_constants.insert(obj.name).second)
                    throw TypeError(section_pos, "duplicate object '" + obj.name + "'");
            }
        } else if (section == ":init") {
            saw_init = true;
            while (!cur.peek_is(Token::Kind::rparen)) {
                cur.expect(Token::Kind::lparen, "'('");
                const Token& atom_head = cur.peek();
                if (atom_head.kind == Token::Kind::symbol && atom_head.text == "not")
                    throw ParseError(cur.pos_of(atom_head),
                                     "negated atoms are not allowed in :init");
                SourcePos pos = cur.pos_of(atom_head);
                std::string name = cur.expect_symbol("predicate name");
                Atom atom = parse_atom_body(cur, name);
                check_ground_atom(atom, pos);
                if (std::find(problem.init.begin(), problem.init.end(), atom) ==
                    problem.init.end())
                    problem.init.push_back(std::move(atom));
            }
            cur.expect(Token::Kind::rparen, "')'");
        } else if (section == ":goal") {
            saw_goal = true;
            parse_condition(cur, problem.goal, true);
            cur.expect(Token::Kind::rparen, "')'");
            for (const Literal& lit : problem.goal)
                check_ground_atom(lit.atom, section_pos);
        } else {
            throw UnsupportedRequirement(section_pos, section);
        }
    }
    cur.expect(Token::Kind::rparen, "')'");
    if (!cur.at_end())
        throw ParseError(cur.pos_of(cur.peek()), "trailing input after problem definition");

    if (problem.domain_name.empty())
        throw ParseError(cur.last_pos(), "problem has no (:domain ...) section");
    if (!saw_init || !saw_goal)
        throw ParseError(cur.last_pos(), "problem needs both :init and :goal");
    return problem;
}

}  // namespace planforge::pddl
