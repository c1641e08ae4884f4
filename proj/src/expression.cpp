#include "synrough/expression.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <numbers>

#include "synrough/error.hpp"

namespace synrough
{

namespace
{

using Node = std::function<double(double, double)>;

class Parser
{
  public:
    explicit Parser(std::string text) : text_(std::move(text)) {}

    Node parse()
    {
        Node n = expr();
        skip();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return n;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw UsageError("bad surface expression '" + text_ + "' at " + std::to_string(pos_) +
                         ": " + what);
    }

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c)
        {
            ++pos_;
            return true;
        }
        return false;
    }

    bool starts_primary()
    {
        skip();
        if (pos_ >= text_.size())
            return false;
        const char c = text_[pos_];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '.';
    }

    Node expr()
    {
        Node lhs = term();
        for (;;)
        {
            if (accept('+'))
                lhs = [a = lhs, b = term()](double x, double y) { return a(x, y) + b(x, y); };
            else if (accept('-'))
                lhs = [a = lhs, b = term()](double x, double y) { return a(x, y) - b(x, y); };
            else
                return lhs;
        }
    }

    Node term()
    {
        Node lhs = unary();
        for (;;)
        {
            if (accept('*'))
                lhs = [a = lhs, b = unary()](double x, double y) { return a(x, y) * b(x, y); };
            else if (accept('/'))
                lhs = [a = lhs, b = unary()](double x, double y) { return a(x, y) / b(x, y); };
            else if (starts_primary())
                lhs = [a = lhs, b = power()](double x, double y) { return a(x, y) * b(x, y); };
            else
                return lhs;
        }
    }

    Node unary()
    {
        if (accept('-'))
            return [a = unary()](double x, double y) { return -a(x, y); };
        if (accept('+'))
            return unary();
        return power();
    }

    Node power()
    {
        Node base = primary();
        if (accept('^'))
            return [a = base, b = unary()](double x, double y) { return std::pow(a(x, y), b(x, y)); };
        return base;
    }

    Node primary()
    {
        skip();
        if (pos_ >= text_.size())
            fail("unexpected end");
        if (accept('('))
        {
            Node inner = expr();
            if (!accept(')'))
                fail("missing ')'");
            return inner;
        }
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
        {
            std::size_t used = 0;
            double v = 0;
            try
            {
                v = std::stod(text_.substr(pos_), &used);
            }
            catch (const std::exception&)
            {
                fail("bad number");
            }
            pos_ += used;
            return [v](double, double) { return v; };
        }
        if (std::isalpha(static_cast<unsigned char>(c)))
        {
            // single-letter variables bind tightly so "xy" reads as x * y
            if (c == 'x' || c == 'y')
            {
                ++pos_;
                if (c == 'x')
                    return [](double x, double) { return x; };
                return [](double, double y) { return y; };
            }
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            const std::string name = text_.substr(start, pos_ - start);
            if (name == "pi")
                return [](double, double) { return std::numbers::pi; };
            if (name == "e")
                return [](double, double) { return std::numbers::e; };
            static const std::map<std::string, double (*)(double)> functions = {
                {"sin", [](double v) { return std::sin(v); }},
                {"cos", [](double v) { return std::cos(v); }},
                {"tan", [](double v) { return std::tan(v); }},
                {"exp", [](double v) { return std::exp(v); }},
                {"log", [](double v) { return std::log(v); }},
                {"sqrt", [](double v) { return std::sqrt(v); }},
                {"abs", [](double v) { return std::abs(v); }},
            };
            const auto fn = functions.find(name);
            if (fn == functions.end())
                fail("unknown name '" + name + "'");
            if (!accept('('))
                fail("expected '(' after " + name);
            Node arg = expr();
            if (!accept(')'))
                fail("missing ')'");
            return [f = fn->second, arg](double x, double y) { return f(arg(x, y)); };
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string text_;
    std::size_t pos_ = 0;
};

} // namespace

SurfaceFunction parse_surface(const std::string& text)
{
    return Parser(text).parse();
}

} // namespace synrough
