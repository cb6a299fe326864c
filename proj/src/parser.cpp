#include "alignlint/parser.hpp"

#include <charconv>
#include <initializer_list>

#include "alignlint/lexer.hpp"

namespace alignlint {

namespace {

constexpr std::string_view kTopLevelExpected =
    "a top-level statement (process, application, datasource, os or technology)";

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

    ParseResult run() {
        while (!at_end()) {
            if (at_keyword("process")) {
                parse_process(model_.processes);
            } else if (at_keyword("application")) {
                parse_application();
            } else if (at_keyword("datasource")) {
                parse_datasource();
            } else if (at_keyword("os")) {
                parse_platform(model_.operating_systems);
            } else if (at_keyword("technology")) {
                parse_platform(model_.technologies);
            } else {
                error(std::string(kTopLevelExpected));
                sync({"process", "application", "datasource", "os", "technology"});
            }
        }
        ParseResult result;
        result.errors = std::move(errors_);
        if (result.errors.empty()) result.model = std::move(model_);
        return result;
    }

private:
    std::vector<Token> tokens_;
    std::size_t index_ = 0;
    RawModel model_;
    std::vector<ParseError> errors_;
    bool reported_eof_ = false;

    const Token& peek() const { return tokens_[index_]; }
    bool at_end() const { return peek().type == TokenType::end_of_input; }
    void advance() {
        if (!at_end()) ++index_;
    }

    bool at_keyword(std::string_view kw) const {
        return peek().type == TokenType::keyword && peek().text == kw;
    }
    bool at(TokenType type) const { return peek().type == type; }

    void error(std::string expected) {
        if (at_end()) {
            if (reported_eof_) return;  // one truncation, one error
            reported_eof_ = true;
        }
        errors_.push_back(ParseError{peek().pos, std::move(expected),
                                     at_end() ? "end of input" : peek().text});
    }

    // Panic-mode recovery: always drops at least one token, then skips until
    // one of the given keywords at the current nesting depth, a '}' closing
    // this level, or end of input.
    void sync(std::initializer_list<std::string_view> stop_keywords) {
        int depth = 0;
        if (!at_end()) {
            if (at(TokenType::lbrace)) ++depth;
            advance();
        }
        while (!at_end()) {
            const Token& t = peek();
            if (depth == 0) {
                if (t.type == TokenType::rbrace) return;
                if (t.type == TokenType::keyword) {
                    for (std::string_view kw : stop_keywords) {
                        if (t.text == kw) return;
                    }
                }
            }
            if (t.type == TokenType::lbrace) ++depth;
            if (t.type == TokenType::rbrace && depth > 0) --depth;
            advance();
        }
    }

    bool expect_keyword(std::string_view kw) {
        if (at_keyword(kw)) {
            advance();
            return true;
        }
        error("'" + std::string(kw) + "'");
        return false;
    }

    bool expect(TokenType type, std::string expected) {
        if (at(type)) {
            advance();
            return true;
        }
        error(std::move(expected));
        return false;
    }

    // Returns the identifier text, or nullopt after recording an error.
    std::optional<Token> expect_identifier(std::string_view what) {
        if (at(TokenType::identifier)) {
            Token t = peek();
            advance();
            return t;
        }
        error(std::string(what));
        return std::nullopt;
    }

    std::vector<RawRef> parse_idlist(std::initializer_list<std::string_view> sync_keywords) {
        std::vector<RawRef> refs;
        while (true) {
            auto id = expect_identifier("an identifier");
            if (!id) {
                sync(sync_keywords);
                return refs;
            }
            refs.push_back(RawRef{{id->text}, id->pos});
            if (!at(TokenType::comma)) return refs;
            advance();
        }
    }

    std::vector<RawRef> parse_reflist(std::initializer_list<std::string_view> sync_keywords) {
        std::vector<RawRef> refs;
        while (true) {
            auto id = expect_identifier("a reference (Name or Container.Name)");
            if (!id) {
                sync(sync_keywords);
                return refs;
            }
            RawRef ref{{id->text}, id->pos};
            if (at(TokenType::dot)) {
                advance();
                auto leaf = expect_identifier("an identifier after '.'");
                if (!leaf) {
                    sync(sync_keywords);
                    return refs;
                }
                ref.path.push_back(leaf->text);
            }
            refs.push_back(std::move(ref));
            if (!at(TokenType::comma)) return refs;
            advance();
        }
    }

    void parse_process(std::vector<RawProcess>& into) {
        advance();  // 'process'
        auto id = expect_identifier("a process name");
        if (!id) {
            sync({"process", "application", "datasource", "os", "technology"});
            return;
        }
        RawProcess process;
        process.id = id->text;
        process.pos = id->pos;
        if (at_keyword("criticality")) {
            advance();
            if (at(TokenType::identifier)) {
                if (auto level = criticality_from_name(peek().text)) {
                    process.criticality = *level;
                    advance();
                } else {
                    error("a criticality level (low, medium or high)");
                    advance();
                }
            } else {
                error("a criticality level (low, medium or high)");
            }
        }
        if (!expect(TokenType::lbrace, "'{'")) {
            sync({"process", "application", "datasource", "os", "technology"});
            return;
        }
        while (true) {
            if (at(TokenType::rbrace)) {
                advance();
                break;
            }
            if (at_keyword("process")) {
                parse_process_child(process.children);
            } else if (at_keyword("activity")) {
                parse_activity(process.children);
            } else if (at_end()) {
                error("'activity', 'process' or '}'");
                break;
            } else {
                error("'activity', 'process' or '}'");
                sync({"activity", "process"});
            }
        }
        into.push_back(std::move(process));
    }

    // Subprocesses share the top-level grammar but land in the parent's
    // child list.
    void parse_process_child(std::vector<RawProcessNode>& children) {
        std::vector<RawProcess> parsed;
        parse_process(parsed);
        for (auto& p : parsed) children.push_back(RawProcessNode{std::move(p)});
    }

    void parse_activity(std::vector<RawProcessNode>& children) {
        advance();  // 'activity'
        auto id = expect_identifier("an activity name");
        if (!id) {
            sync({"activity", "process"});
            return;
        }
        RawActivity activity;
        activity.id = id->text;
        activity.pos = id->pos;
        if (!expect(TokenType::lbrace, "'{'")) {
            sync({"activity", "process"});
            return;
        }
        while (true) {
            if (at(TokenType::rbrace)) {
                advance();
                break;
            }
            if (at_keyword("supported_by")) {
                advance();
                auto refs = parse_idlist({"supported_by", "uses"});
                activity.supported_by.insert(activity.supported_by.end(), refs.begin(), refs.end());
            } else if (at_keyword("uses")) {
                advance();
                auto refs = parse_reflist({"supported_by", "uses"});
                activity.uses.insert(activity.uses.end(), refs.begin(), refs.end());
            } else if (at_end()) {
                error("'supported_by', 'uses' or '}'");
                break;
            } else {
                error("'supported_by', 'uses' or '}'");
                sync({"supported_by", "uses"});
            }
        }
        children.push_back(RawProcessNode{std::move(activity)});
    }

    void parse_quality(RawApplication& app) {
        advance();  // 'quality'
        if (!expect(TokenType::lbrace, "'{'")) {
            sync({"functionality", "quality", "runs_on", "accesses"});
            return;
        }
        while (true) {
            if (at(TokenType::rbrace)) {
                advance();
                return;
            }
            if (at_end()) {
                error("a quality factor name or '}'");
                return;
            }
            if (!at(TokenType::identifier)) {
                error("a quality factor name or '}'");
                sync({});
                continue;
            }
            auto factor = quality_factor_from_name(peek().text);
            if (!factor) {
                error("a quality factor name (one of the McCall factors)");
                sync({});
                continue;
            }
            RawQualityEntry entry;
            entry.factor = *factor;
            entry.pos = peek().pos;
            advance();
            if (!expect(TokenType::colon, "':'")) {
                sync({});
                continue;
            }
            if (!at(TokenType::number)) {
                error("a decimal quality score");
                sync({});
                continue;
            }
            const std::string& text = peek().text;
            std::from_chars(text.data(), text.data() + text.size(), entry.score);
            advance();
            app.quality.push_back(entry);
        }
    }

    void parse_application() {
        advance();  // 'application'
        auto id = expect_identifier("an application name");
        if (!id) {
            sync({"process", "application", "datasource", "os", "technology"});
            return;
        }
        RawApplication app;
        app.id = id->text;
        app.pos = id->pos;
        if (!expect(TokenType::lbrace, "'{'")) {
            sync({"process", "application", "datasource", "os", "technology"});
            return;
        }
        while (true) {
            if (at(TokenType::rbrace)) {
                advance();
                break;
            }
            if (at_keyword("functionality")) {
                advance();
                if (auto fn = expect_identifier("a functionality name")) {
                    app.functionalities.push_back(RawFunctionality{fn->text, fn->pos});
                } else {
                    sync({"functionality", "quality", "runs_on", "accesses"});
                }
            } else if (at_keyword("quality")) {
                parse_quality(app);
            } else if (at_keyword("runs_on")) {
                advance();
                auto refs = parse_idlist({"functionality", "quality", "runs_on", "accesses"});
                app.runs_on.insert(app.runs_on.end(), refs.begin(), refs.end());
            } else if (at_keyword("accesses")) {
                advance();
                auto refs = parse_reflist({"functionality", "quality", "runs_on", "accesses"});
                app.accesses.insert(app.accesses.end(), refs.begin(), refs.end());
            } else if (at_end()) {
                error("'functionality', 'quality', 'runs_on', 'accesses' or '}'");
                break;
            } else {
                error("'functionality', 'quality', 'runs_on', 'accesses' or '}'");
                sync({"functionality", "quality", "runs_on", "accesses"});
            }
        }
        model_.applications.push_back(std::move(app));
    }

    void parse_attribute(RawEntity& entity) {
        advance();  // 'attribute'
        auto id = expect_identifier("an attribute name");
        if (!id) {
            sync({"attribute", "entity"});
            return;
        }
        RawAttribute attr;
        attr.id = id->text;
        attr.pos = id->pos;
        while (at(TokenType::identifier)) {
            if (auto q = qualifier_from_name(peek().text)) {
                attr.qualifiers.push_back(*q);
                advance();
            } else {
                error("a qualifier (secure, confidential or redundant), 'attribute' or '}'");
                sync({"attribute", "entity"});
                break;
            }
        }
        entity.attributes.push_back(std::move(attr));
    }

    void parse_entity(RawDataSource& ds) {
        advance();  // 'entity'
        auto id = expect_identifier("an entity name");
        if (!id) {
            sync({"entity"});
            return;
        }
        RawEntity entity;
        entity.id = id->text;
        entity.pos = id->pos;
        if (!expect(TokenType::lbrace, "'{'")) {
            sync({"entity"});
            return;
        }
        while (true) {
            if (at(TokenType::rbrace)) {
                advance();
                break;
            }
            if (at_keyword("attribute")) {
                parse_attribute(entity);
            } else if (at_end()) {
                error("'attribute' or '}'");
                break;
            } else {
                error("'attribute' or '}'");
                sync({"attribute"});
            }
        }
        ds.entities.push_back(std::move(entity));
    }

    void parse_datasource() {
        advance();  // 'datasource'
        auto id = expect_identifier("a data source name");
        if (!id) {
            sync({"process", "application", "datasource", "os", "technology"});
            return;
        }
        RawDataSource ds;
        ds.id = id->text;
        ds.pos = id->pos;
        if (!expect(TokenType::lbrace, "'{'")) {
            sync({"process", "application", "datasource", "os", "technology"});
            return;
        }
        while (true) {
            if (at(TokenType::rbrace)) {
                advance();
                break;
            }
            if (at_keyword("entity")) {
                parse_entity(ds);
            } else if (at_end()) {
                error("'entity' or '}'");
                break;
            } else {
                error("'entity' or '}'");
                sync({"entity"});
            }
        }
        model_.data_sources.push_back(std::move(ds));
    }

    void parse_platform(std::vector<RawPlatform>& into) {
        advance();  // 'os' or 'technology'
        if (auto id = expect_identifier("a platform name")) {
            into.push_back(RawPlatform{id->text, id->pos});
        } else {
            sync({"process", "application", "datasource", "os", "technology"});
        }
    }
};

}  // namespace

ParseResult parse(std::string_view text) { return Parser(text).run(); }

}  // namespace alignlint
