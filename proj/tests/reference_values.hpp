// High-precision check values for the solver test suite.
// Derived independently of the term-algebra recursion: each series
// component below is the corresponding tau-Taylor term of the closed-form
// soliton (50-digit arithmetic, rounded to double). Regenerating requires
// only the closed form eta = 2(u+w) sech^2(k(x-u tau)), k = sqrt(1.5(u+w)).
#pragma once

namespace ref {

// {u, w, x, tau, eta}
inline constexpr double exact_probes[][5] = {
    {0.5, 0.0, 0.0, 0.5, 0.95455186252661994},
    {0.5, 0.0, 1.3, 0.7, 0.54228031022389067},
    {0.5, 0.5, -0.4, 0.25, 1.3571746542613656},
    {0.5, 1.0, 0.2, 0.5, 2.9831880801305157},
    {0.5, 1.0, 3.0, 1.0, 0.0066296768724259251},
    {0.5, 0.5, 2.0, 0.0, 0.05875429476911323},
    {0.7, 0.3, -1.1, 0.9, 0.11226949928396822},
    {0.5, 1.5, 0.6, 0.4, 2.5610041281536877},
};

// eta_n evaluated at (x=1, tau=0.1), u=0.5, w=1, n = 0..5
inline constexpr double component_probe_w1[6] = {
    0.54211991677094562,
    0.073604834389698268,
    0.0044456952902746172,
    0.00012638320386155927,
    -1.2623259248353066e-06,
    -3.030258528954444e-07,
};

// eta_n evaluated at (x=2, tau=1), u=0.5, w=0, n = 0..5
inline constexpr double component_probe_w0[6] = {
    0.11771960658095804,
    0.095759693600207807,
    0.036349780470223025,
    0.0077426641536773953,
    0.00060985353273987277,
    -0.00020378465629840862,
};

// A_n = tau^n-graded part of eta*eta_x, evaluated at (x=1, tau=0.5), u=0.5, w=1
inline constexpr double adomian_probe_w1[5] = {
    -0.79805293386564913,
    -1.0237871567040229,
    -0.59360927631959803,
    -0.18500186071544977,
    -0.019041973336418896,
};

// partial sums of 1..6 components at (x,tau) in {(1,0.1),(2,0.5),(3,1)}, u=0.5, w=1
inline constexpr double table1_computed[6][3] = {
    {0.54211991677094562, 0.029598111496320575, 0.001480552197178187},
    {0.61572475116064385, 0.051686917654743314, 0.0037008324166136783},
    {0.62017044645091846, 0.059888192234375075, 0.0053652206188593184},
    {0.62029682965478006, 0.061897725285399309, 0.006196592985863664},
    {0.62029556732885516, 0.062259345972655228, 0.0065077415795841836},
    {0.6202952643030023, 0.062309096237435066, 0.006600716762303574},
};

// tau=0.5, x = -2(0.2)2; rows w in {0, 0.5, 1}: closed form and 5-component sum
inline constexpr double table2_exact[3][21] = {
    {0.078002518981378166, 0.10849945529142538, 0.14993241735152599, 0.20531768102670683, 0.27769629297852216, 0.3693478908827596, 0.48043449796529919, 0.60712652389137711, 0.73975905968525923, 0.86227630732347826, 0.95455186252661994, 0.99812734126219604, 0.98331304419765475, 0.91347278282772215, 0.8034968633087185, 0.67356362648650825, 0.54228031022389067, 0.42258356626583038, 0.32103314875436328, 0.23920960846961178, 0.17568482177048947},
    {0.032065474809550638, 0.052070381249721104, 0.084287030628390616, 0.13573537057876864, 0.21678265504288638, 0.34167431015360761, 0.52742966173566952, 0.78851155721469757, 1.1239305795628158, 1.4972551814249251, 1.8236252486180291, 1.9925187102339517, 1.9339902062510772, 1.6732424031293687, 1.3100415735762272, 0.94812687414347607, 0.64804105805428258, 0.42587320189337785, 0.27271577172226164, 0.17175946458089669, 0.10704765936350673},
    {0.014017710129545335, 0.025492887979799761, 0.046288895187164524, 0.083809389680738977, 0.15095978393095269, 0.26939292458452158, 0.47283342067580397, 0.80617067495634698, 1.3084778298198427, 1.9618531417858445, 2.6147399251417682, 2.9831880801305157, 2.8531075189335517, 2.3043293750858829, 1.6218342713149747, 1.0350953333107558, 0.62029524916164502, 0.35786563981209668, 0.20196960958475496, 0.11257611498497985, 0.062314511775622181},
};
inline constexpr double table2_adm[3][21] = {
    {0.077997487724996456, 0.10848589223179926, 0.14990543885993007, 0.20527423464978711, 0.27764172120963787, 0.3693053111605768, 0.48044758847158781, 0.60723703888547698, 0.73995432218745094, 0.86245611069862405, 0.95458984375, 0.99799406229625454, 0.98310799861689613, 0.91332059097424767, 0.80344660916368327, 0.67358910087053747, 0.54233393907573368, 0.4226330673454079, 0.32106688703883657, 0.23922817286638101, 0.17569284736362362},
    {0.032088642732987921, 0.052094086751217739, 0.084293035264864938, 0.13567675820666672, 0.21656997538669426, 0.341211945168099, 0.5268164939192137, 0.78839852058608784, 1.1252807780442518, 1.4995454692034584, 1.82421875, 1.990596595323223, 1.9320327760666158, 1.6728352613527591, 1.3105631754794025, 0.94868675124331892, 0.64834982489196835, 0.42598289009408596, 0.27272879120821386, 0.17173975049225421, 0.10702319475562752},
    {0.014062667553761288, 0.025564471638350694, 0.046387039185872864, 0.08389247495161542, 0.15085492518644819, 0.26865127289360274, 0.47086538483164031, 0.80384493602256979, 1.3107380964791611, 1.9710620451677867, 2.61767578125, 2.97441830813557, 2.8474820986983032, 2.3055499782012663, 1.6242432817584151, 1.0362954177559751, 0.62059226174673532, 0.35782790980974244, 0.20186827800155929, 0.11249233116593679, 0.062259345972655228},
};

// |S_n - exact| at tau=1, w=0, x = 0,2,4,6,8,10; rows n=1..5
inline constexpr double table3_computed[5][6] = {
    {0.16633019428355264, 0.14014064846723942, 0.0053626646406854384, 0.00016893627416811994, 5.2889546647268504e-06, 1.6555120877215832e-07},
    {0.16633019428355264, 0.044380954867031627, 0.0019819494110358601, 6.2713729837758189e-05, 1.9636756573116493e-06, 6.1465886842519108e-08},
    {0.021169805716447363, 0.0080311743968086019, 0.00052379102213827734, 1.6723661135447162e-05, 5.2379313852412976e-07, 1.6395625783322252e-08},
    {0.021169805716447363, 0.0002885102431312067, 0.00010616032974111199, 3.450729175273669e-06, 1.0813805063591951e-07, 3.384965233270827e-09},
    {0.0022676942835526356, 0.00032134328960866613, 1.7166308357197796e-05, 5.7846542191802731e-07, 1.8147466487298799e-08, 5.6807594839988282e-10},
};

// |S_n - exact| at x=5, w=0, tau = 0,0.2,...,1; rows n=1..5
inline constexpr double table4_computed[5][6] = {
    {0, 0.00013102200361196731, 0.00028679921461967502, 0.00047200383937168454, 0.00069218781956670587, 0.00095394761793272519},
    {0, 1.1011580106604629e-05, 4.6778367608949647e-05, 0.00011197256885559645, 0.00021214612554525513, 0.00035389550040591165},
    {0, 6.2557818025443137e-07, 5.234359903548858e-06, 1.8498551518444664e-05, 4.5970094723651945e-05, 9.4245452247156705e-05},
    {0, 2.677378845421944e-08, 4.4392476914716208e-07, 2.3308329398389424e-06, 7.6466136484383778e-06, 1.939490327213021e-05},
    {0, 9.1678367097436585e-10, 3.0212692615240907e-08, 2.3641555239609154e-07, 1.0272204239276391e-06, 3.2342752826020397e-06},
};

// residual of S_n at x=10, w=0, tau = 0.2,...,1; rows n=1..5
inline constexpr double table5_computed[5][5] = {
    {-1.0408532192963922e-07, -1.0408532192963922e-07, -1.0408532192963922e-07, -1.0408532192963922e-07, -1.0408532192963922e-07},
    {-1.8028105549555375e-08, -3.605621335086401e-08, -5.4084323403925909e-08, -7.2112435708741075e-08, -9.0140550265309508e-08},
    {-1.5612794694577605e-09, -6.2451187591899729e-09, -1.4051519343228324e-08, -2.4980482898262225e-08, -3.9032011303638801e-08},
    {-9.0140477821886084e-11, -7.211240051748591e-10, -2.4337941955109667e-09, -5.7689954130682588e-09, -1.1267572940539627e-08},
    {-3.9031940710454147e-12, -6.2451132200913572e-11, -3.1615900776213493e-10, -9.9921911839878492e-10, -2.4395012157952839e-09},
};

// residual of S_n at tau=1, w=0, x = 0,2,4,6,8,10; rows n=1..5
inline constexpr double table6_computed[5][6] = {
    {0, -0.095759693600207807, -0.0033807152296495787, -0.00010622254433036174, -3.3252790074152011e-06, -1.0408532192963922e-07},
    {0.375, -0.093584623982026299, -0.0029458944874306892, -9.2009448497290988e-05, -2.8797937656417165e-06, -9.0140550265309508e-08},
    {-0.2109375, -0.040361745305649309, -0.0012838371917717963, -3.9849669167942301e-05, -1.2469955292073349e-06, -3.9032011303638801e-08},
    {-0.041015625, -0.0082240877450282055, -0.00037229396904108028, -1.150550071330993e-05, -3.5997846363083669e-07, -1.1267572940539627e-08},
    {0.072509765625, 0.00040609610300369173, -8.0591632975480273e-05, -2.4911289843609587e-06, -7.7937740238972468e-08, -2.4395012157952839e-09},
};

// residual of S_n at (x=1.5, tau=0.5), u=0.5, w=1; rows n=1..5
inline constexpr double residual_probe_w1[5] = {
    -0.19129421586757256,
    -0.17647830289652636,
    -0.079126235172656295,
    -0.022488926452714664,
    -0.004370912992538562,
};

}  // namespace ref
