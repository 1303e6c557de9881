//! Reference curves, as (x, y) pairs.

pub const MSE_RLS: &[(f64, f64)] = &[
    (0.0, 0.871446072678727),
    (1.0, 0.83402783533993),
    (2.0, 0.791568725279436),
    (3.0, 0.745122063159603),
    (4.0, 0.695948460707339),
    (5.0, 0.645332509678497),
    (6.0, 0.594442537355299),
    (7.0, 0.54425266239889),
    (8.0, 0.495519859221039),
    (9.0, 0.448797037747719),
    (10.0, 0.404463487622635),
    (11.0, 0.36275967912656),
    (12.0, 0.323819403046235),
    (13.0, 0.287696519183532),
    (14.0, 0.254385987629118),
    (15.0, 0.223839905167041),
    (16.0, 0.195979545129218),
    (17.0, 0.170704321165657),
    (18.0, 0.147898404716632),
    (19.0, 0.127435538501213),
    (20.0, 0.10918244834212),
    (21.0, 0.0930011715704469),
    (22.0, 0.0787505839609838),
    (23.0, 0.0662874020557637),
    (24.0, 0.0554669417298609),
    (25.0, 0.0461439021455937),
    (26.0, 0.0381733954740033),
    (27.0, 0.0314123483189251),
    (28.0, 0.0257212726167438),
    (29.0, 0.0209662738459123),
    (30.0, 0.0170210722015505),
    (31.0, 0.0137687861471301),
    (32.0, 0.0111032703921362),
    (33.0, 0.00892988974130204),
    (34.0, 0.00716571221438941),
    (35.0, 0.00573918927522137),
];
pub const MSE_BOX_BPSK: &[(f64, f64)] = &[
    (0.0, 0.871212202685771),
    (1.0, 0.833246210722417),
    (2.0, 0.789615492297682),
    (3.0, 0.741123719713622),
    (4.0, 0.68883449134569),
    (5.0, 0.633901262880953),
    (6.0, 0.577435940482042),
    (7.0, 0.520444321203),
    (8.0, 0.463820843797481),
    (9.0, 0.408379789072107),
    (10.0, 0.354897176634555),
    (11.0, 0.304138570539753),
    (12.0, 0.256851554403679),
    (13.0, 0.213713366654539),
    (14.0, 0.175247668997248),
    (15.0, 0.141747458444321),
    (16.0, 0.113240350519047),
    (17.0, 0.0895059891235959),
    (18.0, 0.0701311101522994),
    (19.0, 0.0545819874303803),
    (20.0, 0.0422767820546166),
    (21.0, 0.0326447148617247),
    (22.0, 0.0251656421567238),
    (23.0, 0.0193903487730797),
    (24.0, 0.0149459134917745),
    (25.0, 0.0115315743646757),
    (26.0, 0.00890975679755877),
    (27.0, 0.00689550996954936),
    (28.0, 0.00534625416029225),
    (29.0, 0.00415275368428929),
    (30.0, 0.0032316136912938),
    (31.0, 0.00251926670567999),
    (32.0, 0.00196726580944954),
    (33.0, 0.0015386567089992),
    (34.0, 0.00120520846132127),
    (35.0, 0.000945311881560552),
];
pub const MSE_BOX_4PAM: &[(f64, f64)] = &[
    (0.0, 0.871437073370017),
    (1.0, 0.833967209385253),
    (2.0, 0.791324365730621),
    (3.0, 0.744429689589993),
    (4.0, 0.694413620683675),
    (5.0, 0.642474118340835),
    (6.0, 0.589752229154876),
    (7.0, 0.537249879055271),
    (8.0, 0.485794863988491),
    (9.0, 0.436041351695187),
    (10.0, 0.388489516238648),
    (11.0, 0.343511177752101),
    (12.0, 0.301373702979184),
    (13.0, 0.262258973939979),
    (14.0, 0.226277384459951),
    (15.0, 0.193478823812637),
    (16.0, 0.163863349867904),
    (17.0, 0.137393068772852),
    (18.0, 0.114003376487199),
    (19.0, 0.0936079587950949),
    (20.0, 0.076092003140543),
    (21.0, 0.0612955263975044),
    (22.0, 0.0489998231718719),
    (23.0, 0.0389319774671206),
    (24.0, 0.0307886431960565),
    (25.0, 0.024265468161524),
    (26.0, 0.0190790920981082),
    (27.0, 0.0149787038694583),
    (28.0, 0.0117500141105737),
    (29.0, 0.00921468081299643),
    (30.0, 0.00722719150840245),
    (31.0, 0.00567055942687679),
    (32.0, 0.00445173672275899),
    (33.0, 0.0034972766699961),
    (34.0, 0.00274950461211057),
    (35.0, 0.00216328277075067),
];
pub const LAMBDA_RLS: &[(f64, f64)] = &[
    (-5.0, 4.15725770016418),
    (-4.0, 3.40065233738956),
    (-3.0, 2.78566852277249),
    (-2.0, 2.28343007380496),
    (-1.0, 1.87148958002469),
    (0.0, 1.53244444444444),
    (1.0, 1.25278132016269),
    (2.0, 1.02192638242239),
    (3.0, 0.831490252525747),
    (4.0, 0.674694778175488),
    (5.0, 0.545959882944985),
    (6.0, 0.440619744849209),
    (7.0, 0.354733812549138),
    (8.0, 0.284960710962633),
    (9.0, 0.228469902778846),
    (10.0, 0.182874074074074),
    (11.0, 0.146172319407085),
    (12.0, 0.116699289543701),
    (13.0, 0.0930785145994368),
    (14.0, 0.0741796100612779),
    (15.0, 0.0590795935920746),
    (16.0, 0.0470285579271314),
    (17.0, 0.0374197669807297),
    (18.0, 0.0297640355303269),
    (19.0, 0.0236680899985631),
    (20.0, 0.0188165079365079),
    (21.0, 0.0149567907890611),
    (22.0, 0.011887123767544),
    (23.0, 0.00944640309729428),
    (24.0, 0.00750615226607409),
    (25.0, 0.00596399637240288),
    (26.0, 0.00473841155406479),
    (27.0, 0.00376451142524889),
    (28.0, 0.002990672775778),
    (29.0, 0.00237583786637068),
    (30.0, 0.00188736051159073),
    (31.0, 0.00149928815090388),
    (32.0, 0.00119099280633315),
    (33.0, 0.000946080800787821),
    (34.0, 0.000751524937135416),
    (35.0, 0.000596974038426557),
];
pub const LAMBDA_BOX_BPSK: &[(f64, f64)] = &[
    (-5.0, 4.15424581987431),
    (-4.0, 3.38585860392213),
    (-3.0, 2.74304928828863),
    (-2.0, 2.19575501246768),
    (-1.0, 1.72650523915043),
    (0.0, 1.32553878206971),
    (1.0, 0.986474945198123),
    (2.0, 0.703273145381162),
    (3.0, 0.469171413213606),
    (4.0, 0.276273684491576),
    (5.0, 0.115532139016519),
    (6.0, 5.96086098654914e-05),
    (7.0, 5.96086098654914e-05),
    (8.0, 5.96086098654914e-05),
    (9.0, 5.96086098654914e-05),
    (10.0, 5.96086098654914e-05),
    (11.0, 5.96086098654914e-05),
    (12.0, 5.96086098654914e-05),
    (13.0, 5.96086098654914e-05),
    (14.0, 5.96086098654914e-05),
    (15.0, 5.96086098654914e-05),
    (16.0, 6.07870631868558e-05),
    (17.0, 4.89230689787146e-05),
    (18.0, 4.34667185797029e-05),
    (19.0, 5.6679915609408e-05),
    (20.0, 6.54912056601158e-05),
    (21.0, 3.7613662484417e-05),
    (22.0, 6.36483166782655e-05),
    (23.0, 5.71651555860418e-05),
    (24.0, 4.34493399547347e-05),
    (25.0, 3.77139265870937e-05),
    (26.0, 4.86540643110321e-05),
    (27.0, 3.91195412456833e-05),
    (28.0, 5.77358783821564e-05),
    (29.0, 6.60656563422069e-05),
    (30.0, 4.58610944855201e-05),
    (31.0, 4.84195352719802e-05),
    (32.0, 4.60072923578154e-05),
    (33.0, 4.1330272796911e-05),
    (34.0, 5.06278714063414e-05),
    (35.0, 3.58952074289834e-05),
];
pub const LAMBDA_BOX_4PAM: &[(f64, f64)] = &[
    (-5.0, 4.15724945478929),
    (-4.0, 3.40034706019549),
    (-3.0, 2.78335887721174),
    (-2.0, 2.27465840830513),
    (-1.0, 1.84984727229589),
    (0.0, 1.49208057091081),
    (1.0, 1.19055537203053),
    (2.0, 0.938031413445578),
    (3.0, 0.728963441437463),
    (4.0, 0.558331352666662),
    (5.0, 0.421294840179442),
    (6.0, 0.312976823947022),
    (7.0, 0.228664592895155),
    (8.0, 0.164015515013328),
    (9.0, 0.115085806282384),
    (10.0, 0.0784655350399345),
    (11.0, 0.0513249841675759),
    (12.0, 0.0312743254020996),
    (13.0, 0.0163976939512193),
    (14.0, 0.00514350879978435),
    (15.0, 5.96086098654914e-05),
    (16.0, 5.96086098654914e-05),
    (17.0, 5.96086098654914e-05),
    (18.0, 5.96086098654914e-05),
    (19.0, 5.96086098654914e-05),
    (20.0, 5.96086098654914e-05),
    (21.0, 5.96086098654914e-05),
    (22.0, 5.96086098654914e-05),
    (23.0, 5.96086098654914e-05),
    (24.0, 5.96086098654914e-05),
    (25.0, 5.96086098654914e-05),
    (26.0, 5.96086098654914e-05),
    (27.0, 5.96086098654914e-05),
    (28.0, 5.96086098654914e-05),
    (29.0, 5.96086098654914e-05),
    (30.0, 5.96086098654914e-05),
    (31.0, 5.96086098654914e-05),
    (32.0, 5.96086098654914e-05),
    (33.0, 5.96086098654914e-05),
    (34.0, 5.96086098654914e-05),
    (35.0, 5.96086098654914e-05),
];
pub const T_BPSK: &[(f64, f64)] = &[
    (-5.0, 0.655784996233717),
    (-4.0, 0.699667577315661),
    (-3.0, 0.740154774059821),
    (-2.0, 0.77672939261185),
    (-1.0, 0.809236937867073),
    (0.0, 0.837816501281342),
    (1.0, 0.86276875967115),
    (2.0, 0.884597882991335),
    (3.0, 0.903777640289111),
    (4.0, 0.920801752341452),
    (5.0, 0.936147343327707),
    (6.0, 0.957623575701975),
    (7.0, 0.981872525807661),
    (8.0, 0.993699834616644),
    (9.0, 0.998291422969977),
    (10.0, 0.999648997142122),
    (11.0, 0.999932980465548),
    (12.0, 0.999968467903892),
    (13.0, 0.999966927345475),
    (14.0, 0.999962620014242),
    (15.0, 0.999959829600373),
    (16.0, 0.999974429153196),
    (17.0, 0.999970813675536),
    (18.0, 0.999971345555117),
    (19.0, 0.999969034904514),
    (20.0, 0.999966335365578),
    (21.0, 0.999966366490225),
    (22.0, 0.999961215778105),
    (23.0, 0.999980132211762),
    (24.0, 0.999959476958079),
    (25.0, 0.99998602507152),
    (26.0, 0.999966251446396),
    (27.0, 0.999965857886831),
    (28.0, 0.999965140190463),
    (29.0, 0.999963697107555),
    (30.0, 0.99996238061099),
];
pub const T_4PAM: &[(f64, f64)] = &[
    (-5.0, 1.64513355963242),
    (-4.0, 1.76498782268879),
    (-3.0, 1.87830095435446),
    (-2.0, 1.98322236085632),
    (-1.0, 2.07892037574507),
    (0.0, 2.1654684168812),
    (1.0, 2.24350166033929),
    (2.0, 2.31417389444816),
    (3.0, 2.37883334504961),
    (4.0, 2.43893183943836),
    (5.0, 2.49587539453415),
    (6.0, 2.55093974932897),
    (7.0, 2.60507842042143),
    (8.0, 2.65900273774476),
    (9.0, 2.71276281688572),
    (10.0, 2.7659482244386),
    (11.0, 2.81748544590484),
    (12.0, 2.86561223457354),
    (13.0, 2.90803476661852),
    (14.0, 2.9425897556917),
    (15.0, 2.97023904737386),
    (16.0, 2.98759421461489),
    (17.0, 2.99575460575744),
    (18.0, 2.9988871901456),
    (19.0, 2.99975681125119),
    (20.0, 2.999942750708),
    (21.0, 2.99990839054146),
    (22.0, 2.99994774759922),
    (23.0, 2.99992031027954),
    (24.0, 2.99991695195547),
    (25.0, 2.99990117314568),
    (26.0, 2.9998964040024),
    (27.0, 2.99989162467992),
    (28.0, 2.99989003443697),
    (29.0, 2.9999096218919),
    (30.0, 2.99988588099282),
];
pub const MSE_DB_LS: &[(f64, f64)] = &[
    (0.001, 13.7522642938386),
    (0.011, 3.35366133479564),
    (0.021, 0.560976644237925),
    (0.031, -1.11460177992811),
    (0.041, -2.3127067969147),
    (0.051, -3.24417520541753),
    (0.061, -4.00509145132674),
    (0.071, -4.6474030347897),
    (0.081, -5.20239503952094),
    (0.091, -5.69037470745019),
    (0.101, -6.12527255209067),
    (0.111, -6.51705987263272),
    (0.121, -6.87311910507284),
    (0.131, -7.19906817409022),
    (0.141, -7.49928073818944),
    (0.151, -7.77722774671097),
    (0.161, -8.03570924367427),
    (0.171, -8.27701619254655),
    (0.181, -8.50304623312322),
    (0.191, -8.71538826097845),
    (0.201, -8.9153853904172),
    (0.211, -9.10418260669515),
    (0.221, -9.28276336614868),
    (0.231, -9.45197808171086),
    (0.241, -9.61256655870905),
    (0.251, -9.76517585744646),
    (0.261, -9.91037465479619),
    (0.271, -10.0486648944957),
    (0.281, -10.1804913152726),
    (0.291, -10.3062493015306),
    (0.301, -10.4262913959748),
    (0.311, -10.5409327357741),
    (0.321, -10.6504556157642),
    (0.331, -10.7551133383672),
    (0.341, -10.8551334765006),
    (0.351, -10.9507206500633),
    (0.361, -11.0420588966615),
    (0.371, -11.1293137016537),
    (0.381, -11.2126337403087),
    (0.391, -11.2921523751136),
    (0.401, -11.3679889434601),
    (0.411, -11.4402498646407),
    (0.421, -11.5090295899739),
    (0.431, -11.5744114156911),
    (0.441, -11.6364681747625),
    (0.451, -11.6952628209609),
    (0.461, -11.75084891604),
    (0.471, -11.8032710288429),
    (0.481, -11.8525650533768),
    (0.491, -11.8987584513281),
    (0.501, -11.9418704231012),
    (0.511, -11.9819120101889),
    (0.521, -12.0188861304951),
    (0.531, -12.0527875470845),
    (0.541, -12.0836027697067),
    (0.551, -12.1113098872898),
    (0.561, -12.1358783283981),
    (0.571, -12.1572685453535),
    (0.581, -12.1754316163007),
    (0.591, -12.1903087578952),
    (0.601, -12.2018307394669),
    (0.611, -12.2099171873848),
    (0.621, -12.2144757658469),
    (0.631, -12.2154012173391),
    (0.641, -12.2125742424202),
    (0.651, -12.2058601941416),
    (0.661, -12.1951075570836),
    (0.671, -12.1801461744291),
    (0.681, -12.1607851783368),
    (0.691, -12.1368105686724),
    (0.701, -12.1079823722861),
    (0.711, -12.0740312986714),
    (0.721, -12.0346547869009),
    (0.731, -11.9895123116893),
    (0.741, -11.9382197812013),
    (0.751, -11.8803428129013),
    (0.761, -11.8153886122186),
    (0.771, -11.7427960962447),
    (0.781, -11.6619237925948),
    (0.791, -11.5720348895422),
    (0.801, -11.4722785990163),
    (0.811, -11.3616666909349),
    (0.821, -11.2390436221913),
    (0.831, -11.1030480479906),
    (0.841, -10.9520625568325),
    (0.851, -10.7841470311509),
    (0.861, -10.5969487944123),
    (0.871, -10.3875791218235),
    (0.881, -10.1524397873566),
    (0.891, -9.88697325364278),
    (0.901, -9.58529226181158),
    (0.911, -9.23961144372102),
    (0.921, -8.8393386495214),
    (0.931, -8.3695478998509),
    (0.941, -7.80824830969748),
    (0.951, -7.12109277552359),
    (0.961, -6.24996678042144),
    (0.971, -5.08432864304534),
    (0.981, -3.36980817761104),
    (0.991, -0.247574897446142),
];
pub const MSE_DB_RLS: &[(f64, f64)] = &[
    (0.001, -0.338788881844735),
    (0.011, -2.37836950997842),
    (0.021, -3.55367213898155),
    (0.031, -4.41032459868902),
    (0.041, -5.09264050715015),
    (0.051, -5.66276921888778),
    (0.061, -6.15377119532222),
    (0.071, -6.5855433774293),
    (0.081, -6.97108284165921),
    (0.091, -7.31939200015261),
    (0.101, -7.63698740887294),
    (0.111, -7.92875122527047),
    (0.121, -8.19844339202249),
    (0.131, -8.4490257733226),
    (0.141, -8.682875945707),
    (0.151, -8.90193313961925),
    (0.161, -9.10780079978566),
    (0.171, -9.3018204736029),
    (0.181, -9.48512620122876),
    (0.191, -9.65868531310652),
    (0.201, -9.82332954346028),
    (0.211, -9.9797791102376),
    (0.221, -10.1286615980712),
    (0.231, -10.2705269416272),
    (0.241, -10.4058594418223),
    (0.251, -10.5350874956958),
    (0.261, -10.6585915440748),
    (0.271, -10.7767106152192),
    (0.281, -10.8897477515219),
    (0.291, -10.997974539564),
    (0.301, -11.1016349142676),
    (0.311, -11.2009483707091),
    (0.321, -11.2961126889516),
    (0.331, -11.3873062556652),
    (0.341, -11.4746900496106),
    (0.351, -11.5584093450477),
    (0.361, -11.6385951769079),
    (0.371, -11.7153656034584),
    (0.381, -11.7888267957237),
    (0.391, -11.8590739777231),
    (0.401, -11.9261922373663),
    (0.411, -11.9902572244111),
    (0.421, -12.0513357490513),
    (0.431, -12.1094862923554),
    (0.441, -12.1647594378097),
    (0.451, -12.2171982315553),
    (0.461, -12.2668384774873),
    (0.471, -12.3137089721479),
    (0.481, -12.3578316832621),
    (0.491, -12.3992218747907),
    (0.501, -12.4378881804818),
    (0.511, -12.4738326270732),
    (0.521, -12.5070506074919),
    (0.531, -12.5375308036121),
    (0.541, -12.5652550573302),
    (0.551, -12.5901981878827),
    (0.561, -12.6123277524498),
    (0.571, -12.6316037461116),
    (0.581, -12.6479782361528),
    (0.591, -12.6613949244849),
    (0.601, -12.6717886305529),
    (0.611, -12.6790846854545),
    (0.621, -12.6831982260735),
    (0.631, -12.6840333757325),
    (0.641, -12.681482295123),
    (0.651, -12.6754240839379),
    (0.661, -12.6657235095825),
    (0.671, -12.6522295343668),
    (0.681, -12.6347736064394),
    (0.691, -12.6131676720871),
    (0.701, -12.5872018574555),
    (0.711, -12.5566417556806),
    (0.721, -12.5212252400789),
    (0.731, -12.4806587043997),
    (0.741, -12.4346126057608),
    (0.751, -12.3827161528243),
    (0.761, -12.3245509382717),
    (0.771, -12.2596432568578),
    (0.781, -12.1874547727279),
    (0.791, -12.107371094266),
    (0.801, -12.018687669714),
    (0.811, -11.9205922145459),
    (0.821, -11.8121425952613),
    (0.831, -11.6922386822941),
    (0.841, -11.5595860811998),
    (0.851, -11.4126487493587),
    (0.861, -11.2495861273835),
    (0.871, -11.0681682559662),
    (0.881, -10.8656588720007),
    (0.891, -10.6386506954578),
    (0.901, -10.382827142519),
    (0.911, -10.092606738967),
    (0.921, -9.76059249940685),
    (0.931, -9.37668014207913),
    (0.941, -8.92653091712422),
    (0.951, -8.38876301168096),
    (0.961, -7.72927243264443),
    (0.971, -6.88811140667877),
    (0.981, -5.7422851257472),
    (0.991, -3.95279171208567),
];
pub const MSE_DB_BOX: &[(f64, f64)] = &[
    (0.011, -2.33219421167247),
    (0.021, -4.42879236186204),
    (0.031, -5.94205631231233),
    (0.041, -7.0988503123387),
    (0.051, -8.0194466809389),
    (0.061, -8.77743054362166),
    (0.071, -9.41893414937155),
    (0.081, -9.97369922915514),
    (0.091, -10.4616140430618),
    (0.101, -10.8964930500635),
    (0.111, -11.2882748145159),
    (0.121, -11.6443323839267),
    (0.131, -11.9702809480058),
    (0.141, -12.2704933566278),
    (0.151, -12.5484403166076),
    (0.161, -12.8069217982053),
    (0.171, -13.0482287421464),
    (0.181, -13.2742587811184),
    (0.191, -13.4866008084443),
    (0.201, -13.6865979377059),
    (0.211, -13.8753951539237),
    (0.221, -14.0539759133566),
    (0.231, -14.2231906289115),
    (0.241, -14.3837791059071),
    (0.251, -14.5363884046436),
    (0.261, -14.681587201993),
    (0.271, -14.8198774416924),
    (0.281, -14.9517038624693),
    (0.291, -15.0774618487272),
    (0.301, -15.1975039431714),
    (0.311, -15.3121452829707),
    (0.321, -15.4216681629608),
    (0.331, -15.5263258855638),
    (0.341, -15.6263460236972),
    (0.351, -15.7219331972599),
    (0.361, -15.8132714438581),
    (0.371, -15.9005262488503),
    (0.381, -15.9838462875053),
    (0.391, -16.0633649223102),
    (0.401, -16.1392014906567),
    (0.411, -16.2114624118373),
    (0.421, -16.2802421371705),
    (0.431, -16.3456239628877),
    (0.441, -16.4076807219591),
    (0.451, -16.4664753681576),
    (0.461, -16.5220614632366),
    (0.471, -16.5744835760396),
    (0.481, -16.6237776005734),
    (0.491, -16.6699709985247),
    (0.501, -16.7130829702978),
    (0.511, -16.7531245573855),
    (0.521, -16.7900986776917),
    (0.531, -16.8240000942811),
    (0.541, -16.8548153169033),
    (0.551, -16.8825224344864),
    (0.561, -16.9070908755947),
    (0.571, -16.9284810925501),
    (0.581, -16.9466441634973),
    (0.591, -16.9615213050918),
    (0.601, -16.9730432866636),
    (0.611, -16.9811297345815),
    (0.621, -16.9856883130436),
    (0.631, -16.9866137645357),
    (0.641, -16.9837867896168),
    (0.651, -16.9770727413382),
    (0.661, -16.9663201042802),
    (0.671, -16.9513587216257),
    (0.681, -16.9319977255334),
    (0.691, -16.9080231158691),
    (0.701, -16.8791949194828),
    (0.711, -16.845243845868),
    (0.721, -16.8058673340976),
    (0.731, -16.760724858886),
    (0.741, -16.709432328398),
    (0.751, -16.6515553600979),
    (0.761, -16.5866011594152),
    (0.771, -16.5140086434413),
    (0.781, -16.4331363397914),
    (0.791, -16.3432474367388),
    (0.801, -16.2434911462129),
    (0.811, -16.1328792381315),
    (0.821, -16.0102561693879),
    (0.831, -15.8742605951872),
    (0.841, -15.7232751040291),
    (0.851, -15.5553595783476),
    (0.861, -15.3681613416089),
    (0.871, -15.1587916690201),
    (0.881, -14.9236523345532),
    (0.891, -14.6581858008396),
    (0.901, -14.3565048090099),
    (0.911, -14.0108239909322),
    (0.921, -13.6105511968572),
    (0.931, -13.1407604485887),
    (0.941, -12.5794608767843),
    (0.951, -11.8923056251456),
    (0.961, -11.0211848162493),
    (0.971, -9.85566220989074),
    (0.981, -8.14435364877179),
    (0.991, -5.13950311304858),
];
