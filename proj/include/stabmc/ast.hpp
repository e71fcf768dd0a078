#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "stabmc/rational.hpp"
#include "stabmc/source.hpp"
#include "stabmc/tableau.hpp"

namespace stabmc {

// ---------------------------------------------------------------- types

enum class BaseType : uint8_t { Integer, Bool, Real, Qubit };

struct DataType {
    BaseType base = BaseType::Integer;
    bool channel = false;

    bool operator==(const DataType&) const = default;
    bool numeric() const { return !channel && (base == BaseType::Integer || base == BaseType::Real); }
};

inline std::string type_name(DataType t) {
    std::string base;
    switch (t.base) {
        case BaseType::Integer: base = "integer"; break;
        case BaseType::Bool: base = "bool"; break;
        case BaseType::Real: base = "real"; break;
        case BaseType::Qubit: base = "qubit"; break;
    }
    return t.channel ? "channel of " + base : base;
}

// ---------------------------------------------------------- expressions

enum class VarScope : uint8_t { Unresolved, Shared, Local };

/// A name occurrence, optionally process-qualified (properties only).
/// Resolution fields are filled by the typechecker.
struct VarRef {
    std::string process;
    std::string name;
    SourceLoc loc;
    VarScope scope = VarScope::Unresolved;
    uint32_t proc_index = 0;  // when scope == Local
    uint32_t slot = 0;

    std::string display() const { return process.empty() ? name : process + "." + name; }
};

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct IntLit {
    long long value = 0;
};
struct BoolLit {
    bool value = false;
};
struct RealLit {
    double value = 0.0;
    std::string text;  // original spelling, kept for exact reuse and printing
};
struct VarExpr {
    VarRef ref;
};
enum class UnaryOp : uint8_t { Not };
struct UnaryExpr {
    UnaryOp op;
    ExprPtr operand;
};
enum class BinaryOp : uint8_t { And, Or, Imp, Eq, Neq, Lt, Le, Gt, Ge, Add, Sub, Mul };
struct BinaryExpr {
    BinaryOp op;
    ExprPtr lhs, rhs;
};

struct Expr {
    SourceLoc loc;
    DataType type;  // filled by the typechecker
    std::variant<IntLit, BoolLit, RealLit, VarExpr, UnaryExpr, BinaryExpr> node;
};

inline ExprPtr make_expr(SourceLoc loc, auto node) {
    auto e = std::make_unique<Expr>();
    e->loc = loc;
    e->node = std::move(node);
    return e;
}

inline std::string binary_op_spelling(BinaryOp op) {
    switch (op) {
        case BinaryOp::And: return "and";
        case BinaryOp::Or: return "or";
        case BinaryOp::Imp: return "imp";
        case BinaryOp::Eq: return "==";
        case BinaryOp::Neq: return "!=";
        case BinaryOp::Lt: return "<";
        case BinaryOp::Le: return "<=";
        case BinaryOp::Gt: return ">";
        case BinaryOp::Ge: return ">=";
        case BinaryOp::Add: return "+";
        case BinaryOp::Sub: return "-";
        case BinaryOp::Mul: return "*";
    }
    return "?";
}

// ----------------------------------------------------------- statements

struct Stmt;

struct AssignStmt {
    VarRef target;
    ExprPtr value;
};
struct NewQubitStmt {
    VarRef target;
};
struct GateStmt {
    GateKind gate;
    VarRef qubit;
};
struct CNotStmt {
    VarRef control;
    VarRef target;
};
struct MeasureStmt {
    VarRef target;
    VarRef qubit;
};
struct SendStmt {
    VarRef channel;
    ExprPtr value;
};
struct ReceiveStmt {
    VarRef channel;
    VarRef target;
};
struct SkipStmt {};
struct GuardedBranch {
    ExprPtr guard;
    std::vector<Stmt> body;
};
struct GuardedStmt {
    bool loop = false;  // false: if..fi (falls through when no guard holds)
    std::vector<GuardedBranch> branches;
};

struct Stmt {
    SourceLoc loc;
    uint32_t id = 0;  // unique within the program, assigned by the parser
    std::variant<AssignStmt, NewQubitStmt, GateStmt, CNotStmt, MeasureStmt, SendStmt, ReceiveStmt,
                 SkipStmt, GuardedStmt>
        node;
};

// ----------------------------------------------------- formula: classical

struct ClassicalFormula;
using ClassicalPtr = std::unique_ptr<ClassicalFormula>;

struct CBottom {};
struct CQubitAtom {
    VarRef qubit;
};
struct CStoreAtom {
    ExprPtr expr;  // bool-typed expression over the classical stores
};
struct CImplies {
    ClassicalPtr lhs, rhs;
};

struct ClassicalFormula {
    SourceLoc loc;
    std::variant<CBottom, CQubitAtom, CStoreAtom, CImplies> node;
};

inline ClassicalPtr make_classical(SourceLoc loc, auto node) {
    auto f = std::make_unique<ClassicalFormula>();
    f->loc = loc;
    f->node = std::move(node);
    return f;
}

// --------------------------------------------------------- formula: terms

struct Term;
using TermPtr = std::unique_ptr<Term>;

struct TermVar {
    VarRef var;
};
struct TermLiteral {
    Rational value;
};
struct TermSum {
    TermPtr lhs, rhs;
};
struct TermProd {
    TermPtr lhs, rhs;
};
struct TermProb {
    ClassicalPtr phi;
};
/// Re/Im of one basis amplitude of the factor state on `qubits`; `selector`
/// must pick out exactly one valuation of those qubits.
struct TermAmp {
    bool imaginary = false;
    std::vector<VarRef> qubits;
    ClassicalPtr selector;
};

struct Term {
    SourceLoc loc;
    std::variant<TermVar, TermLiteral, TermSum, TermProd, TermProb, TermAmp> node;
};

inline TermPtr make_term(SourceLoc loc, auto node) {
    auto t = std::make_unique<Term>();
    t->loc = loc;
    t->node = std::move(node);
    return t;
}

// ------------------------------------------------------- formula: quantum

struct QuantumFormula;
using QuantumPtr = std::unique_ptr<QuantumFormula>;

struct QBottom {};
struct QLifted {
    ClassicalPtr inner;  // holds on every support valuation
};
struct QLeq {
    TermPtr lhs, rhs;
};
struct QImplies {
    QuantumPtr lhs, rhs;
};
struct QUnentangled {
    std::vector<VarRef> qubits;
};

struct QuantumFormula {
    SourceLoc loc;
    std::variant<QBottom, QLifted, QLeq, QImplies, QUnentangled> node;
};

inline QuantumPtr make_quantum(SourceLoc loc, auto node) {
    auto f = std::make_unique<QuantumFormula>();
    f->loc = loc;
    f->node = std::move(node);
    return f;
}

// ------------------------------------------------------ formula: temporal
//
// After parsing only these five forms remain; AG/EF/AX/EG/A[..U..], and/or/
// not are expanded by the parser.

struct TemporalFormula;
using TemporalPtr = std::unique_ptr<TemporalFormula>;

struct TState {
    QuantumPtr state;
};
struct TImplies {
    TemporalPtr lhs, rhs;
};
struct TExistsNext {
    TemporalPtr sub;
};
struct TExistsUntil {
    TemporalPtr lhs, rhs;
};
struct TAllFinally {
    TemporalPtr sub;
};

struct TemporalFormula {
    SourceLoc loc;
    std::variant<TState, TImplies, TExistsNext, TExistsUntil, TAllFinally> node;
};

inline TemporalPtr make_temporal(SourceLoc loc, auto node) {
    auto f = std::make_unique<TemporalFormula>();
    f->loc = loc;
    f->node = std::move(node);
    return f;
}

// --------------------------------------------------------------- program

struct VarDecl {
    std::string name;
    DataType type;
    SourceLoc loc;
};

struct ProcessDecl {
    std::string name;
    SourceLoc loc;
    std::vector<VarDecl> locals;
    std::vector<Stmt> body;
};

enum class PropertyKind : uint8_t { FinalState, Temporal };

struct PropertyDecl {
    PropertyKind kind = PropertyKind::FinalState;
    SourceLoc loc;
    std::string text;      // formula source text, verbatim
    QuantumPtr state;      // FinalState properties
    TemporalPtr temporal;  // Temporal properties
};

struct Program {
    std::string name;
    std::vector<VarDecl> shared;
    std::vector<ProcessDecl> processes;  // declaration order
    std::vector<PropertyDecl> properties;  // declaration order, both kinds
};

// ---------------------------------------------------------- pretty print

namespace detail {

inline void print_expr(std::ostream& os, const Expr& e) {
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, IntLit>) os << n.value;
            else if constexpr (std::is_same_v<T, BoolLit>) os << (n.value ? "true" : "false");
            else if constexpr (std::is_same_v<T, RealLit>) os << n.text;
            else if constexpr (std::is_same_v<T, VarExpr>) os << n.ref.display();
            else if constexpr (std::is_same_v<T, UnaryExpr>) {
                os << "(not ";
                print_expr(os, *n.operand);
                os << ')';
            } else {
                os << '(';
                print_expr(os, *n.lhs);
                os << ' ' << binary_op_spelling(n.op) << ' ';
                print_expr(os, *n.rhs);
                os << ')';
            }
        },
        e.node);
}

inline void print_stmt(std::ostream& os, const Stmt& s, int indent) {
    std::string pad(static_cast<size_t>(indent) * 4, ' ');
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, AssignStmt>) {
                os << pad << n.target.name << " := ";
                print_expr(os, *n.value);
                os << ";\n";
            } else if constexpr (std::is_same_v<T, NewQubitStmt>) {
                os << pad << n.target.name << " := newqubit;\n";
            } else if constexpr (std::is_same_v<T, GateStmt>) {
                const char* g = n.gate == GateKind::Had ? "had" : n.gate == GateKind::Ph ? "ph" : "X";
                os << pad << g << ' ' << n.qubit.name << ";\n";
            } else if constexpr (std::is_same_v<T, CNotStmt>) {
                os << pad << "cnot " << n.control.name << ' ' << n.target.name << ";\n";
            } else if constexpr (std::is_same_v<T, MeasureStmt>) {
                os << pad << n.target.name << " := meas " << n.qubit.name << ";\n";
            } else if constexpr (std::is_same_v<T, SendStmt>) {
                os << pad << n.channel.name << '!';
                print_expr(os, *n.value);
                os << ";\n";
            } else if constexpr (std::is_same_v<T, ReceiveStmt>) {
                os << pad << n.channel.name << '?' << n.target.name << ";\n";
            } else if constexpr (std::is_same_v<T, SkipStmt>) {
                os << pad << "skip;\n";
            } else if constexpr (std::is_same_v<T, GuardedStmt>) {
                os << pad << (n.loop ? "do" : "if") << '\n';
                for (const auto& br : n.branches) {
                    os << pad << ":: ";
                    print_expr(os, *br.guard);
                    os << " ->\n";
                    for (const auto& body_stmt : br.body) print_stmt(os, body_stmt, indent + 1);
                }
                os << pad << (n.loop ? "od" : "fi") << '\n';
            }
        },
        s.node);
}

}  // namespace detail

/// Renders a program back to concrete syntax that re-parses to a
/// structurally identical AST.
inline std::string print_program(const Program& p) {
    std::ostringstream os;
    os << "program " << p.name << ";\n";
    if (!p.shared.empty()) {
        os << "var";
        for (const auto& v : p.shared) os << ' ' << v.name << ": " << type_name(v.type) << ';';
        os << '\n';
    }
    for (const auto& proc : p.processes) {
        os << "process " << proc.name << ";\n";
        if (!proc.locals.empty()) {
            os << "var";
            for (const auto& v : proc.locals) os << ' ' << v.name << ": " << type_name(v.type) << ';';
            os << '\n';
        }
        os << "begin\n";
        for (const auto& s : proc.body) detail::print_stmt(os, s, 1);
        os << "end;\n";
    }
    os << "endprogram.\n";
    for (const auto& prop : p.properties) {
        os << (prop.kind == PropertyKind::FinalState ? "finalstateproperty" : "property") << " ("
           << prop.text << ");\n";
    }
    return os.str();
}

}  // namespace stabmc
