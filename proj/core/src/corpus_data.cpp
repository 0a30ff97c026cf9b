#include "classnum/corpus.hpp"

namespace classnum::corpus {

const std::string& embedded_corpus_text() {
    static const std::string text = R"CORPUS_TEXT(# Embedded verification corpus: class-number factor tables.
schema 1
entry id=cm-59 kind=cyclotomic_minus n=59 g=58 factors=3,2.29+1,2^3.29+1 quad=-59:3 expect=3:case2b;59:case2a;233:case2a prov="minus table n=59"
entry id=cm-71 kind=cyclotomic_minus n=71 g=70 factors=7^2,2^3.5.7.283+1 expect=7:case1+case2b;79241:case2a+case2b prov="minus table n=71"
entry id=cm-79 kind=cyclotomic_minus n=79 g=78 factors=5,2^2.13+1,2.3^2.5.13.17.19+1 quad=-79:5 expect=5:case2b;53:case2a;377911:case2a prov="minus table n=79"
entry id=cm-83 kind=cyclotomic_minus n=83 g=82 factors=3,2^2.41.1703693+1 quad=-83:3 expect=3:case2b;279405653:case2a prov="minus table n=83"
entry id=cm-103 kind=cyclotomic_minus n=103 g=102 factors=5,2.3.17+1,2^2.3.5.17+1,2.3^2.5.17.11273+1 quad=-103:5 expect=5:case2b;103:case2a;1021:case2a;17247691:case2a prov="minus table n=103"
entry id=cm-107 kind=cyclotomic_minus n=107 g=106 factors=2.7.53+1,2.3.31.53+1,2^6.23.37.53+1 expect=743:case2a+case2b;9859:case2a+case2b;2886593:case2a+case2b prov="minus table n=107"
entry id=cm-121 kind=cyclotomic_minus n=121 g=110 factors=2.3.11+1,2^5.11+1,2^2.5.11.13+1,2^2.3^2.5.11.13+1 flags=plus1-restored expect=67:case2a+case2b;353:case2a+case2b;2861:case2a+case2b;25741:case2a+case2b prov="minus table n=121; last factor printed without +1"
entry id=cm-127 kind=cyclotomic_minus n=127 g=126 factors=5,2^2.3+1,2.3.7+1,2.3.7.13+1,2.3^2.7^2+1,2.3^4.19+1,2.3^2.7.4973+1 quad=-127:5 expect=5:case2b;13:case2a;43:case2a;547:case2a;883:case2a;3079:case2a;626599:case2a prov="minus table n=127"
entry id=cm-131 kind=cyclotomic_minus n=131 g=130 factors=3^3,5^2,2^2.13+1,2.5.13+1,2^2.5^2.13+1,2^2.5^2.13.29.151.821+1 structure=3:noncyclic quad=-131:5 expect=3:inapplicable;5:case1+case2b;53:case2a;131:case2a;1301:case2a;4673706701:case2a prov="minus table n=131; G(3) not cyclic per Schoof; h(-131)=5 from commentary"
entry id=cm-139 kind=cyclotomic_minus n=139 g=138 factors=3^2,2.23+1,2^2.3.23+1,2.3.7.23+1,2^2.3.23.4307833+1 expect=3:case1+case2b;47:case2a+case2b;277:case2a+case2b;967:case2a+case2b;1188961909:case2a+case2b prov="minus table n=139"
entry id=cm-151 kind=cyclotomic_minus n=151 g=150 factors=2.3+1,(2.5+1)^2,2^2.5.7+1?,2.3.5^2.173+1,2^2.3.5^4.7.23+1,2^2.3.5^2.7.13.73.1571+1? structure=11:noncyclic expect=3:case1+case2b;7:case2a+case2b;11:inapplicable;47:case2b;823:case2a+case2b;25951:case2a+case2b;1207501:case2a+case2b;3804187:case2a+case2b prov="minus table n=151; G(11) not cyclic per Schoof"
entry id=cm-163 kind=cyclotomic_minus n=163 g=162 factors=2^2.3^2.5+1,2.3^4.11.13+1,2^5.3^5.47+1,2.3^4.17.19.29.71.73.56179+1 flags=degree-typo expect=181:case2a+case2b;23167:case2a+case2b;365473:case2a+case2b;441845817162679:case2a+case2b prov="minus table n=163; source prints g=150, phi(163)=162"
entry id=cm-167 kind=cyclotomic_minus n=167 g=166 factors=11,2.3.83+1,2.83.22107011.1396054413416693+1 quad=-167:11 expect=11:case2b;499:case2a;5123189985484229035947419:case2a prov="minus table n=167"
entry id=cm-179 kind=cyclotomic_minus n=179 g=178 factors=2^2.3.89+1,2^4.5.89.173.19207.155731.3924348446411+1 expect=1069:case2a+case2b;14458667392334948286764635121:case2a+case2b prov="minus table n=179"
entry id=cm-191 kind=cyclotomic_minus n=191 g=190 factors=2.5+1,13,2.19^2.71+1,2.3.5.19.277.3881+1 quad=-191:13 expect=11:case2a;13:case2b;51263:case2a;612771091:case2a prov="minus table n=191"
entry id=cm-199 kind=cyclotomic_minus n=199 g=198 factors=3^4,2.3^2+1,2.3.11^2+1,2^2.3.11.23.8447+1,2^4.3^2.11.13.17.331.1789+1 flags=plus1-restored expect=3:case1+case2b;19:case2a+case2b;727:case2a+case2b;25645093:case2a+case2b;207293548177:case2a+case2b prov="minus table n=199; last two factors printed without +1"
entry id=cm-211 kind=cyclotomic_minus n=211 g=210 factors=3,2.3+1,2^2.5+1?,2^2.3^2.5+1,2^3.5.7+1,2.3.5^2.7+1,2.5^3.7+1?,2^2.3.5^2.7.54277+1,2^2.3.5.59.122743+1? expect=3:case1+case2b;7:case1+case2a+case2b;17:case2b;19:case2a+case2b;103:case2a+case2b;181:case2a+case2b;281:case2a+case2b;463:case2a+case2b;1051:case2a+case2b;49393:case2a+case2b;113981701:case2a+case2b prov="minus table n=211"
entry id=cm-223 kind=cyclotomic_minus n=223 g=222 factors=2.3+1,2.3.7+1,2.13.17.37.34141.32077+1,2.3.5^2.37.419417.5051+1 flags=plus1-restored expect=7:case2a+case2b;43:case2a+case2b;11757537731851:case2a+case2b;17909933575379:case2a+case2b prov="minus table n=223; last factor printed without +1"
entry id=cm-227 kind=cyclotomic_minus n=227 g=226 factors=5,(2.13.113+1)^3,2^2.5^2.113.149807435573+1,2^2.3.113.2207.4973.903334373+1 structure=2939:noncyclic quad=-227:5 expect=5:case2b;2939:inapplicable;1692824021974901:case2a;13444015915122722869:case2a prov="minus table n=227; G(2939) not cyclic per Schoof (commentary)"
entry id=cm-239 kind=cyclotomic_minus n=239 g=238 factors=3,5,2.3.17.5011+1,2.3.13.17.1523+1!,2^2.7.17.41.6321643+1,2.3.7.17.31.182453.315075469.17681+1 quad=-239:15 expect=3:case2b;5:case2b;89:suspect;22691:suspect;511123:case2a;123373184789:case2a;22497399987891136953079:case2a prov="minus table n=239; h(-239)=3.5=15; 2.3.13.17.1523+1=89x22691 composite, suspected misprint"
entry id=cm-251 kind=cyclotomic_minus n=251 g=250 factors=7,2.5+1,2^4.3.5^4.13.19.47+1,2.3^2.5^3.89.1559.30851+1,2^2.3^2.5^3.463.827.214520849205730542617+1 quad=-251:7 expect=7:case2b;11:case2a;348270001:case2a;9631365977251:case2a;369631114567755437243663626501:case2a prov="minus table n=251"
entry id=cm-263 kind=cyclotomic_minus n=263 g=262 factors=3^4 quad=-263:13 flags=partial expect=3:inferred_noncyclic prov="commentary n=263; 3^4 || h-, h(-263)=13; remaining factors not printed"
entry id=cm-307 kind=cyclotomic_minus n=307 g=306 factors=3^3,2^2.3^2+1,2^3.17+1,2.13.17+1,2^2.3.7.17+1,2.3^2.17+1,2^5.3^2.13.17.160119221+1,2^2.3^2.17+1,2.3^3.17+1,2.3^3.17.37459802253317.11580768409391.1286690597+1 expect=3:case1+case2b;37:case2a+case2b;137:case2a+case2b;307:case2a+case2b;443:case2a+case2b;613:case2a+case2b;919:case2a+case2b;1429:case2a+case2b;10191268178209:case2a+case2b;512412441029648479897766391339165893563:case2a+case2b prov="minus table n=307"
entry id=rc-163 kind=real_cyclotomic_conjectured n=163 g=81 factors=2^2 structure=2:noncyclic flags=conjectured expect=2:inapplicable prov="real conjectured table p=163"
entry id=rc-191 kind=real_cyclotomic_conjectured n=191 g=95 factors=2.5+1 flags=conjectured expect=11:case2a prov="real conjectured table p=191"
entry id=rc-491 kind=real_cyclotomic_conjectured n=491 g=245 factors=2^3 structure=2:noncyclic flags=conjectured expect=2:inapplicable prov="real conjectured table p=491"
entry id=rc-547 kind=real_cyclotomic_conjectured n=547 g=273 factors=2^2 structure=2:noncyclic flags=conjectured expect=2:inapplicable prov="real conjectured table p=547"
entry id=rc-827 kind=real_cyclotomic_conjectured n=827 g=413 factors=2^3 structure=2:noncyclic flags=conjectured expect=2:inapplicable prov="real conjectured table p=827"
entry id=rc-1063 kind=real_cyclotomic_conjectured n=1063 g=531 factors=2.3+1 flags=conjectured expect=7:case2a prov="real conjectured table p=1063"
entry id=rc-1231 kind=real_cyclotomic_conjectured n=1231 g=615 factors=2.3.5.7+1 flags=conjectured expect=211:case2a prov="real conjectured table p=1231"
entry id=rc-1399 kind=real_cyclotomic_conjectured n=1399 g=699 factors=2^2 structure=2:noncyclic flags=conjectured expect=2:inapplicable prov="real conjectured table p=1399"
entry id=rc-1459 kind=real_cyclotomic_conjectured n=1459 g=729 factors=2.3.41+1? flags=conjectured expect=13:case2a;19:case2a prov="real conjectured table p=1459"
entry id=rc-1567 kind=real_cyclotomic_conjectured n=1567 g=783 factors=2.3+1 flags=conjectured expect=7:case2a prov="real conjectured table p=1567"
entry id=rc-2659 kind=real_cyclotomic_conjectured n=2659 g=1329 factors=2.3^2+1 flags=conjectured expect=19:case2a prov="real conjectured table p=2659"
entry id=rc-3547 kind=real_cyclotomic_conjectured n=3547 g=1773 factors=2.3^2+1,2.3^2.7^2+1 flags=conjectured expect=19:case2a;883:case2a prov="real conjectured table p=3547"
entry id=rc-8017 kind=real_cyclotomic_conjectured n=8017 g=4008 factors=2.3^2+1,2.3^2.7^2+1,2^2.3^3+1 flags=conjectured,gamma expect=19:gamma_violation;109:gamma_violation;883:gamma_violation prov="real conjectured table p=8017"
entry id=rc-8563 kind=real_cyclotomic_conjectured n=8563 g=4281 factors=(2.3+1)^2 structure=7:noncyclic flags=conjectured expect=7:inapplicable prov="real conjectured table p=8563"
entry id=rc-9907 kind=real_cyclotomic_conjectured n=9907 g=4953 factors=2.3.5+1 flags=conjectured expect=31:case2a prov="real conjectured table p=9907"
entry id=cu-3969-1 kind=cubic_totally_real n=63 g=3 factors=3 expect=3:case1 prov="cubic table D=3969"
entry id=cu-3969-2 kind=cubic_totally_real n=63 g=3 factors=7 expect=7:case2a prov="cubic table D=3969"
entry id=cu-8281-1 kind=cubic_totally_real n=91 g=3 factors=3 expect=3:case1 prov="cubic table D=8281"
entry id=cu-8281-2 kind=cubic_totally_real n=91 g=3 factors=3 expect=3:case1 prov="cubic table D=8281"
entry id=cu-13689-1 kind=cubic_totally_real n=117 g=3 factors=3 expect=3:case1 prov="cubic table D=13689"
entry id=cu-13689-2 kind=cubic_totally_real n=117 g=3 factors=13 expect=13:case2a prov="cubic table D=13689"
entry id=cu-17689-1 kind=cubic_totally_real n=133 g=3 factors=3 expect=3:case1 prov="cubic table D=17689"
entry id=cu-17689-2 kind=cubic_totally_real n=133 g=3 factors=3 expect=3:case1 prov="cubic table D=17689"
entry id=cu-26569 kind=cubic_totally_real n=163 g=3 factors=2^2 structure=2:noncyclic expect=2:inapplicable prov="cubic table D=26569"
entry id=cu-47089-1 kind=cubic_totally_real n=217 g=3 factors=3 expect=3:case1 prov="cubic table D=47089"
entry id=cu-47089-2 kind=cubic_totally_real n=217 g=3 factors=3 expect=3:case1 prov="cubic table D=47089"
entry id=cu-61009-1 kind=cubic_totally_real n=247 g=3 factors=3 expect=3:case1 prov="cubic table D=61009"
entry id=cu-61009-2 kind=cubic_totally_real n=247 g=3 factors=3 expect=3:case1 prov="cubic table D=61009"
entry id=cu-67081-1 kind=cubic_totally_real n=259 g=3 factors=3 expect=3:case1 prov="cubic table D=67081"
entry id=cu-67081-2 kind=cubic_totally_real n=259 g=3 factors=3 expect=3:case1 prov="cubic table D=67081"
entry id=cu-76729 kind=cubic_totally_real n=277 g=3 factors=2^2 structure=2:noncyclic expect=2:inapplicable prov="cubic table D=76729"
entry id=cu-77841-1 kind=cubic_totally_real n=279 g=3 factors=3 expect=3:case1 prov="cubic table D=77841"
entry id=cu-77841-2 kind=cubic_totally_real n=279 g=3 factors=3 expect=3:case1 prov="cubic table D=77841"
entry id=cu-90601-1 kind=cubic_totally_real n=301 g=3 factors=3 expect=3:case1 prov="cubic table D=90601"
entry id=cu-90601-2 kind=cubic_totally_real n=301 g=3 factors=3 expect=3:case1 prov="cubic table D=90601"
entry id=cu-97969 kind=cubic_totally_real n=313 g=3 factors=7 expect=7:case2a prov="cubic table D=97969"
entry id=cu-110889-1 kind=cubic_totally_real n=333 g=3 factors=3 expect=3:case1 prov="cubic table D=110889"
entry id=cu-110889-2 kind=cubic_totally_real n=333 g=3 factors=3 expect=3:case1 prov="cubic table D=110889"
entry id=cu-121801 kind=cubic_totally_real n=349 g=3 factors=2^2 structure=2:noncyclic expect=2:inapplicable prov="cubic table D=121801"
entry id=cu-149769-1 kind=cubic_totally_real n=387 g=3 factors=3 expect=3:case1 prov="cubic table D=149769"
entry id=cu-149769-2 kind=cubic_totally_real n=387 g=3 factors=3 expect=3:case1 prov="cubic table D=149769"
entry id=cu-157609 kind=cubic_totally_real n=397 g=3 factors=2^2 structure=2:noncyclic expect=2:inapplicable prov="cubic table D=157609"
entry id=cu-162409-1 kind=cubic_totally_real n=403 g=3 factors=3 expect=3:case1 prov="cubic table D=162409"
entry id=cu-162409-2 kind=cubic_totally_real n=403 g=3 factors=3 expect=3:case1 prov="cubic table D=162409"
entry id=cu-67081-3 kind=cubic_totally_real n=259 g=3 factors=3 flags=disc-typo expect=3:case1 prov="cubic table D=67081"
entry id=cu-182329-1 kind=cubic_totally_real n=427 g=3 factors=3 expect=3:case1 prov="cubic table D=182329"
entry id=cu-182329-2 kind=cubic_totally_real n=427 g=3 factors=3 expect=3:case1 prov="cubic table D=182329"
entry id=cu-368449 kind=cubic_totally_real n=607 g=3 factors=2^2 structure=2:noncyclic expect=2:inapplicable prov="cubic table D=368449"
entry id=cu-727609 kind=cubic_totally_real n=853 g=3 factors=2^2 structure=2:noncyclic expect=2:inapplicable prov="cubic table D=727609"
entry id=cu-1432809-1 kind=cubic_totally_real n=1197 g=3 factors=3^2 structure=3:noncyclic flags=disc-typo expect=3:inapplicable prov="cubic table D=1432809"
entry id=cu-1432809-2 kind=cubic_totally_real n=1197 g=3 factors=2^2,3^2 structure=2:noncyclic,3:noncyclic flags=disc-typo expect=2:inapplicable;3:inapplicable prov="cubic table D=1432809"
entry id=cu-1432809-3 kind=cubic_totally_real n=1197 g=3 factors=3^2 structure=3:noncyclic flags=disc-typo expect=3:inapplicable prov="cubic table D=1432809"
entry id=cu-1432809-4 kind=cubic_totally_real n=1197 g=3 factors=3^2 structure=3:noncyclic flags=disc-typo expect=3:inapplicable prov="cubic table D=1432809"
entry id=ms-40-g2-0 kind=real_cyclic_conductor n=40 g=2 factors=2 expect=2:case1+case2b prov="conductor table f=40 g=2"
entry id=ms-60-g2-1 kind=real_cyclic_conductor n=60 g=2 factors=2 expect=2:case1+case2b prov="conductor table f=60 g=2"
entry id=ms-63-g3-2 kind=real_cyclic_conductor n=63 g=3 factors=3 expect=3:case1 prov="conductor table f=63 g=3"
entry id=ms-63-g3-3 kind=real_cyclic_conductor n=63 g=3 factors=3 expect=3:case1 prov="conductor table f=63 g=3"
entry id=ms-63-g6-4 kind=real_cyclic_conductor n=63 g=6 factors=3 expect=3:case1+case2b prov="conductor table f=63 g=6"
entry id=ms-63-g6-5 kind=real_cyclic_conductor n=63 g=6 factors=3 expect=3:case1+case2b prov="conductor table f=63 g=6"
entry id=ms-65-g2-6 kind=real_cyclic_conductor n=65 g=2 factors=2 expect=2:case1+case2b prov="conductor table f=65 g=2"
entry id=ms-91-g3-7 kind=real_cyclic_conductor n=91 g=3 factors=3 expect=3:case1 prov="conductor table f=91 g=3"
entry id=ms-91-g3-8 kind=real_cyclic_conductor n=91 g=3 factors=3 expect=3:case1 prov="conductor table f=91 g=3"
entry id=ms-91-g6-9 kind=real_cyclic_conductor n=91 g=6 factors=3 expect=3:case1+case2b prov="conductor table f=91 g=6"
entry id=ms-91-g6-10 kind=real_cyclic_conductor n=91 g=6 factors=3 flags=uncertain-conductor expect=3:case1+case2b prov="conductor table f=91 g=6"
entry id=qu-a kind=quintic_note g=5 factors=2^4,5,2.5+1 expect=2:inferred_noncyclic;5:case1;11:case2a prov="quintic notes aggregate: h_i in {2,5,2.5.k+1}, power of 2 is 2^4"
entry id=qu-b kind=quintic_note g=5 factors=2^8,2.3.5+1 expect=2:inferred_noncyclic;31:case2a prov="quintic notes aggregate: power of 2 is 2^8"
entry id=qu-c kind=quintic_note g=5 factors=5^2,2^3.5+1 expect=5:case1;41:case2a prov="quintic notes aggregate"
entry id=dc-9011 kind=decimic_imaginary n=9011 g=10 factors=3,11,1566031 quad=-9011:? expect=3:case2b;11:case2a+case2b;1566031:case2a+case2b prov="decimic table f=9011"
entry id=dc-9081 kind=decimic_imaginary n=9081 g=10 factors=3,7,41,491 quad=-9081:? flags=uncertain-conductor expect=3:case2b;7:case2b;41:case2a+case2b;491:case2a+case2b prov="decimic table f=9081"
entry id=dc-9151 kind=decimic_imaginary n=9151 g=10 factors=67,23741 quad=-9151:? expect=67:case2b;23741:case2a+case2b prov="decimic table f=9151"
entry id=dc-9311 kind=decimic_imaginary n=9311 g=10 factors=97,56891 quad=-9311:? expect=97:case2b;56891:case2a+case2b prov="decimic table f=9311"
entry id=dc-9371 kind=decimic_imaginary n=9371 g=10 factors=7^2,151,271 quad=-9371:? expect=7:case2b;151:case2a+case2b;271:case2a+case2b prov="decimic table f=9371"
entry id=dc-9391 kind=decimic_imaginary n=9391 g=10 factors=5^2,119281? quad=-9391:? expect=5:case1+case2b;101:case2a+case2b;1181:case2a+case2b prov="decimic table f=9391"
entry id=dc-9431 kind=decimic_imaginary n=9431 g=10 factors=7,13,31,17041 quad=-9431:? expect=7:case2b;13:case2b;31:case2a+case2b;17041:case2a+case2b prov="decimic table f=9431"
entry id=dc-9491 kind=decimic_imaginary n=9491 g=10 factors=3^2,5^2,31,2341 quad=-9491:? expect=3:case2b;5:case1+case2b;31:case2a+case2b;2341:case2a+case2b prov="decimic table f=9491"
entry id=cc-55 kind=cyclo_construction n=55 g=40 factors=2,5 flags=p=5,a=2,b=1 expect=5:prediction prov="construction table p=5 a=2 b=1"
entry id=cc-305 kind=cyclo_construction n=305 g=240 factors=2^3,3^2,5^4,13^2 flags=p=5,a=3,b=1,partial expect=5:prediction prov="construction table p=5 a=3 b=1"
entry id=cc-301 kind=cyclo_construction n=301 g=252 factors=2^10,3^3,7^7,19 flags=p=7,a=2,b=1,partial expect=7:prediction prov="construction table p=7 a=2 b=1"
)CORPUS_TEXT";
    return text;
}

}  // namespace classnum::corpus
