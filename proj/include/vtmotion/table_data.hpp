/**
 * @file table_data.hpp
 * @brief The table rows as embedded text. Apart from the leading newline this is
 * a byte-for-byte copy of data/tables.txt; a unit test keeps the two in sync.
 */
#pragma once

#include <string_view>

namespace vtmotion {

inline constexpr std::string_view kTableData = R"TABLES(
# Group tables for the p-cycle and 2^2-element classifications.
# Fields: table|row|p|m|X|Y|mindeg|instances|note
# Instances are ';'-separated; each sets p and/or m and may override X, Y.
# An instance marked 'boundary' is checked and reported but not counted.
# '-' means not applicable (or, for instances, metadata only).
version 1
1|1|2|>=2|Sym(m)|Sym(m)|always|p=2 m=2; p=2 m=3; p=2 m=4|-
1|2|>=3|>=3|Alt(m)|Sym(m)|p3_and_C|p=3 m=3; p=3 m=4; p=3 m=5; p=5 m=5; p=5 m=6|-
1|3|>=5|p|C(p)|AGL1(p)|cond_C|p=5 m=5; p=7 m=7; p=11 m=11|-
1|4|(q^d-1)/(q-1)|p|PGL(d,q)|PGammaL(d,q)|never|p=7 m=7 X=PGL3(2) Y=PGL3(2); p=5 m=5 X=Alt(5) Y=Sym(5)|(d,q)=(3,2) directly; (d,q)=(2,4) through PGL2(4)=Alt(5), PGammaL2(4)=Sym(5)
1|5|11|11|PSL2(11)@11|PSL2(11)@11|never|-|action on 11 points
1|6|11|11|M11|M11|never|-|-
1|7|23|23|M23|M23|never|-|-
1|8|2^a-1|2^a|AGL1(2^a)|AGammaL1(2^a)|cond_C|p=3 m=4 X=Alt(4) Y=Sym(4)|a=2 through AGL1(4)=Alt(4), AGammaL1(4)=Sym(4)
1|9|2^d-1|2^d|AGL(d,2)|AGammaL(d,2)|never|p=7 m=8 X=AGL(3,2) Y=AGL(3,2)|AGammaL(d,2)=AGL(d,2); d=2 gives p=3 and is excluded
1|10|>=5|p+1|PSL2(p)|PGL2(p)|never|p=5 m=6; p=7 m=8; p=11 m=12|-
1|11|11|12|M11|M11|never|-|-
1|12|11|12|M12|M12|never|-|-
1|13|23|24|M24|M24|never|-|-
1|14|2^a-1|2^a+1|PGL2(2^a)|PGammaL2(2^a)|cond_C|p=3 m=5 X=Alt(5) Y=Sym(5)|a=2 through PGL2(4)=Alt(5), PGammaL2(4)=Sym(5)
2|1|-|>=4|Alt(m)|Sym(m)|not_applicable|m=4 boundary; m=5; m=6; m=7|at m=4 the closure of a 2^2-element is the Klein group
2|2|-|5|D(5)|AGL1(5)|not_applicable|m=5|-
2|3|-|6|PSL2(5)|PGL2(5)|not_applicable|m=6|-
2|4|-|7|PGL3(2)|PGL3(2)|not_applicable|m=7|-
2|5|-|8|AGL(3,2)|AGL(3,2)|not_applicable|m=8|-
3|1|-|>=2|DiagSym(m)|SuperflipSym(m)|not_applicable|m=2; m=3; m=4|-
3|2|-|>=2|Even(m)|C2wrSym(m)|not_applicable|m=2; m=3; m=4|X differs from table 4 row 2
4|1|-|>=2|DiagSym(m)|SuperflipSym(m)|not_applicable|m=2; m=3|-
4|2|-|>=2|EvenSym(m)|C2wrSym(m)|not_applicable|m=2; m=3|at m=2 EvenSym(2)=SuperflipSym(2)
)TABLES";

}  // namespace vtmotion
