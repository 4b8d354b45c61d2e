// Generated by tests/oracles/bessel_reference.py; do not edit.
use num_complex::Complex64;

/// (nu, x, e^{-x} I_nu(x), e^{x} K_nu(x))
pub const REAL: &[(f64, f64, f64, f64)] = &[
    (0.0, 1e-06, 0.99999900000074999958, 13.931456005075458808),
    (0.0, 0.001, 0.99900074958351555937, 7.0307160023782514978),
    (0.0, 0.1, 0.90710092578230109165, 2.6823261022628943375),
    (0.0, 0.5, 0.64503527044915006811, 1.52410938577390953),
    (0.0, 1.0, 0.4657596075936404365, 1.1444630798068950147),
    (0.0, 1.999, 0.30860160102480459479, 0.84176019018918333711),
    (0.0, 2.0, 0.30850832255367103953, 0.84156821507077141792),
    (0.0, 2.001, 0.30841512292597123946, 0.84137637287354027321),
    (0.0, 5.0, 0.18354081260932835307, 0.54780756431351898687),
    (0.0, 12.5, 0.11402192946228890093, 0.35109349766701513464),
    (0.0, 29.9, 0.073269219046001907707, 0.22826434895903156885),
    (0.0, 30.1, 0.073023294131060941854, 0.22751085105627908307),
    (0.0, 80.0, 0.044673291782275277952, 0.13990735522662031824),
    (0.0, 700.0, 0.015081295651531357587, 0.047362369454613572112),
    (0.3, 1e-06, 0.014344000439358052085, 116.16474677095780761),
    (0.3, 0.001, 0.11382469969751625348, 14.420961282245524375),
    (0.3, 0.1, 0.41122178014176285142, 3.100066839753630902),
    (0.3, 0.5, 0.46760586418093304733, 1.6099336591565363587),
    (0.3, 1.0, 0.40054527739459047367, 1.1826592506049941935),
    (0.3, 1.999, 0.29478708969291475048, 0.85760611126438198458),
    (0.3, 2.0, 0.29471125410306295759, 0.85740371300843001737),
    (0.3, 2.001, 0.29463546731654342292, 0.8572014592569801846),
    (0.3, 5.0, 0.18166915887022482597, 0.55234470223327118797),
    (0.3, 12.5, 0.11359421456625656429, 0.35231283572853747534),
    (0.3, 29.9, 0.073157119809872155746, 0.22860259115108036409),
    (0.3, 30.1, 0.072912325982588829059, 0.2278457703793091023),
    (0.3, 80.0, 0.044648011016732987954, 0.13998558955848898616),
    (0.3, 700.0, 0.015080325477307068893, 0.047365412104601832295),
    (0.5, 1e-06, 7.9788376291883645774e-4, 1.2533141373155002796e+3),
    (0.5, 0.001, 0.025206110707457800594, 39.633272976060109721),
    (0.5, 0.1, 0.22868316607552338863, 3.9633272976060109033),
    (0.5, 0.5, 0.35663583483745893528, 1.7724538509055160273),
    (0.5, 1.0, 0.34495131388824462599, 1.2533141373155002512),
    (0.5, 1.999, 0.27698695699954989024, 0.8864485653025288315),
    (0.5, 2.0, 0.27692804543535513001, 0.88622692545275801365),
    (0.5, 2.001, 0.27686915996143358327, 0.88600545177056600912),
    (0.5, 5.0, 0.17840431170432102234, 0.56049912163979286993),
    (0.5, 12.5, 0.11283791670798417074, 0.35449077018110320546),
    (0.5, 29.9, 0.072958260640694850122, 0.22920513564749630277),
    (0.5, 30.1, 0.072715470414516991938, 0.2284423876565725392),
    (0.5, 80.0, 0.044603102903819277863, 0.14012478040994821748),
    (0.5, 700.0, 0.015078600877302686163, 0.04737082174254673015),
    (0.75, 1e-06, 2.0458887304324040084e-5, 3.258567564408573282e+4),
    (0.75, 0.001, 3.6345296149739763927e-3, 183.41796480814597824),
    (0.75, 0.1, 0.1042493259964923464, 6.1853128525744835799),
    (0.75, 0.5, 0.24175405434537854548, 2.1297353984214539888),
    (0.75, 1.0, 0.2735871866816720292, 1.4020226274497155561),
    (0.75, 1.999, 0.24816762705036868104, 0.94534425081763934422),
    (0.75, 2.0, 0.24813166635643387105, 0.94508228431133190136),
    (0.75, 2.001, 0.24809570639101104974, 0.94482053045820771692),
    (0.75, 5.0, 0.1722222745700338157, 0.57675717180644785489),
    (0.75, 12.5, 0.11137572334808745716, 0.35878254467181359492),
    (0.75, 29.9, 0.072571439926001439308, 0.23038651618901850293),
    (0.75, 30.1, 0.072332536448147968535, 0.22961211784351472401),
    (0.75, 80.0, 0.044515522525340692373, 0.14039703517698536309),
    (0.75, 700.0, 0.015075233086954750616, 0.04738138922266805348),
    (1.0, 1e-06, 4.9999950000031247723e-7, 1.0000009999932843172e+6),
    (1.0, 0.001, 4.9950031235422134737e-4, 1.0009967345590684316e+3),
    (1.0, 0.1, 0.045298446808809327277, 10.890182683049696015),
    (1.0, 0.5, 0.15642080318487169714, 2.7310097082117857054),
    (1.0, 1.0, 0.20791041534970844887, 1.6361534862632582465),
    (1.0, 1.999, 0.21528367593867837208, 1.0338018208600278251),
    (1.0, 2.0, 0.21526928924893765916, 1.0334768470686885732),
    (1.0, 2.001, 0.21525488473089581865, 1.0331521611403637454),
    (1.0, 5.0, 0.16397226694454235693, 0.60027385878831258294),
    (1.0, 12.5, 0.10936143099065089054, 0.36487641350940623661),
    (1.0, 29.9, 0.072033374911868787814, 0.23205057795494409653),
    (1.0, 30.1, 0.071799854351014333186, 0.23125970409799612741),
    (1.0, 80.0, 0.044393200058097465141, 0.14077907713800052244),
    (1.0, 700.0, 0.015070519444716846949, 0.047396187653494544137),
    (1.5, 1e-06, 2.6596125430626107646e-10, 1.2533153906296376518e+9),
    (1.5, 0.001, 8.4020363423501935534e-6, 3.9672906249036169006e+4),
    (1.5, 0.1, 7.6176951894028301885e-3, 43.596600273666117737),
    (1.5, 0.5, 0.058471662583135768062, 5.3173615527165480819),
    (1.5, 1.0, 0.1079819330263761039, 2.5066282746310005024),
    (1.5, 1.999, 0.14878096697920028481, 1.3298945709566202686),
    (1.5, 2.0, 0.14879751539472359193, 1.3293403881791370205),
    (1.5, 2.001, 0.14881403177910445832, 1.328786786988240201),
    (1.5, 5.0, 0.1427396491853689961, 0.67259894596775144392),
    (1.5, 12.5, 0.10381088337447961038, 0.3828500317955914619),
    (1.5, 29.9, 0.070518185033982647661, 0.23687085924774701561),
    (1.5, 30.1, 0.07029967405523071325, 0.23603183575147528101),
    (1.5, 80.0, 0.04404556411752153689, 0.1418763401650725702),
    (1.5, 700.0, 0.015057060018906539468, 0.047438494345036082621),
    (2.0, 1e-06, 1.2499987500007290532e-13, 2.0000020000005001808e+12),
    (2.0, 0.001, 1.2487507288542741095e-7, 2.0020004998341391998e+6),
    (2.0, 0.1, 1.1319896061145964131e-3, 220.48597976325680255),
    (2.0, 0.5, 0.019352057709663279537, 12.448148218621052351),
    (2.0, 1.0, 0.049938776894223538763, 4.4167700523334115077),
    (2.0, 1.999, 0.093210229400313989275, 1.8760791705393862067),
    (2.0, 2.0, 0.093239033304733380375, 1.8750450621394599911),
    (2.0, 2.001, 0.093267811850613088036, 1.8740122160922946983),
    (2.0, 5.0, 0.1179519058315114103, 0.78791710782884402004),
    (2.0, 12.5, 0.096524100503784758441, 0.40947372382852013249),
    (2.0, 29.9, 0.068450933098719714313, 0.24378612674865993725),
    (2.0, 30.1, 0.068252539689133079409, 0.24287694435182699779),
    (2.0, 80.0, 0.043563461780822841323, 0.1434268321550703313),
    (2.0, 700.0, 0.01503823702454645231, 0.047497787133623556524),
    (2.5, 1e-06, 5.3192250861250693106e-17, 3.7599461718901664396e+15),
    (2.5, 0.001, 1.6804072204584046375e-9, 1.190187583803814806e+8),
    (2.5, 0.1, 1.5231039343849566541e-4, 1.3118613355075894704e+3),
    (2.5, 0.5, 5.805859338644326904e-3, 33.676623167204804519),
    (2.5, 1.0, 0.021005514809116314286, 8.7731989612085017585),
    (2.5, 1.999, 0.053703864984742071411, 2.8822883416256206703),
    (2.5, 2.0, 0.05373177234326974211, 2.8802375077214635444),
    (2.5, 2.001, 0.053759667039237981312, 2.8781895402087073496),
    (2.5, 5.0, 0.092760522193099624674, 0.96405848922044373628),
    (2.5, 12.5, 0.087923304698109064244, 0.44637477781204515631),
    (2.5, 29.9, 0.065882857460027694502, 0.25297144259543078707),
    (2.5, 30.1, 0.065708858382434196928, 0.25196715533944382855),
    (2.5, 80.0, 0.04295139424941222023, 0.14544514316613843887),
    (2.5, 700.0, 0.015014070620078800994, 0.047574129575454027646),
    (3.3, 1e-06, 1.8171683945672650911e-22, 8.3379807819750913527e+20),
    (3.3, 0.001, 1.4419869821864308741e-12, 1.0507386386068329541e+11),
    (3.3, 0.1, 5.2025785221712102274e-6, 2.9108380348300524491e+4),
    (3.3, 0.5, 7.163960340575933721e-4, 208.89140648611730165),
    (3.3, 1.0, 4.4690374432570666646e-3, 32.342697274556323689),
    (3.3, 1.999, 0.019173964004831657136, 6.7202778886574525064),
    (3.3, 2.0, 0.019190718072784125238, 6.7135061166587914236),
    (3.3, 2.001, 0.01920747290597847445, 6.7067458299022831132),
    (3.3, 5.0, 0.057355650001148031536, 1.453190581276969569),
    (3.3, 12.5, 0.072591624949949577894, 0.53302502240045335939),
    (3.3, 29.9, 0.06089043387159618513, 0.27300866182811941127),
    (3.3, 30.1, 0.060761872800849747071, 0.2717896882046101093),
    (3.3, 80.0, 0.041716305613499998635, 0.14969709931730708779),
    (3.3, 700.0, 0.014964356734611530911, 0.047731952128229741501),
    (5.0, 1e-06, 2.6041640625014100005e-34, 3.8400038400016808692e+32),
    (5.0, 0.001, 2.6015639100479079826e-19, 3.843841680400049602e+17),
    (5.0, 0.1, 2.357329429578214097e-9, 4.241205019917821144e+7),
    (5.0, 0.5, 4.9876055214701639354e-6, 1.9946196094733716309e+4),
    (5.0, 1.0, 9.9865714112086907179e-5, 981.19261150291560166),
    (5.0, 1.999, 1.3275509516937356543e-3, 69.807451217987647584),
    (5.0, 2.0, 1.3297610941881578142e-3, 69.686550876076751184),
    (5.0, 2.001, 1.3319733548048383814e-3, 69.565939785281770469),
    (5.0, 5.0, 0.014540318125234771271, 4.8540414040762028051),
    (5.0, 12.5, 0.040805420931421419114, 0.9103141275621140028),
    (5.0, 29.9, 0.04793728656570141539, 0.3441011583679527381),
    (5.0, 30.1, 0.047912933274993209026, 0.34204972449456171081),
    (5.0, 80.0, 0.038175293493241961366, 0.16340273010185422743),
    (5.0, 700.0, 0.014814188973601688447, 0.048215104912462455463),
    (6.0, 1e-06, 2.1701367187511619847e-41, 3.8400038400017290431e+39),
    (6.0, 0.001, 2.1679699121353406112e-23, 3.843841728448069526e+21),
    (6.0, 0.1, 1.9643242724707510231e-11, 4.241735060166193471e+9),
    (6.0, 0.5, 2.0750844834613875439e-7, 4.0016416438837910969e+5),
    (6.0, 1.0, 8.2731162169067918834e-6, 9.9321622872550708537e+3),
    (6.0, 1.999, 2.1609673484905806034e-4, 365.45863807878626487),
    (6.0, 2.0, 2.1655991537989607768e-4, 364.65850035656604158),
    (6.0, 2.001, 2.1702377786640310712e-4, 363.86062838735563585),
    (6.0, 5.0, 5.3383788458419933412e-3, 11.972728970042914989),
    (6.0, 12.5, 0.026212378720516534587, 1.3757608683427870207),
    (6.0, 29.9, 0.039801126331497075046, 0.41197998037345461016),
    (6.0, 30.1, 0.039830352672403739285, 0.40904676179027140362),
    (6.0, 80.0, 0.035625423071488371922, 0.17494845482373366265),
    (6.0, 700.0, 0.014698166439251690144, 0.048595153805915640685),
];

/// (nu, z, K_nu(z))
pub const COMPLEX: &[(f64, Complex64, Complex64)] = &[
    (
        0.0,
        Complex64::new(0.5, 0.5),
        Complex64::new(0.55297231092557471449, -0.59964194785659462702),
    ),
    (
        0.0,
        Complex64::new(-1.0, 1.0),
        Complex64::new(-1.4796971087496251933, -2.5883064433920073708),
    ),
    (
        0.0,
        Complex64::new(-3.0, 0.2000000000000000111),
        Complex64::new(-2.4367916219987847304, -15.102267595660341881),
    ),
    (
        0.0,
        Complex64::new(-2.0, -4.0),
        Complex64::new(1.2126567830377705245, -4.2535077282799862882),
    ),
    (
        0.0,
        Complex64::new(1.5, -7.0),
        Complex64::new(0.019708182028859619271, 0.10215020088027881527),
    ),
    (
        0.0,
        Complex64::new(-12.0, 9.0),
        Complex64::new(-3.6213613602572455287e+4, 3.8731510691484297586e+4),
    ),
    (
        0.0,
        Complex64::new(4.0, 4.0),
        Complex64::new(-3.1119212780918218486e-3, 8.9796115546804315484e-3),
    ),
    (
        0.0,
        Complex64::new(-0.2000000000000000111, -0.10000000000000000555),
        Complex64::new(1.6064869780197937161, 2.7242550159969898815),
    ),
    (
        0.0,
        Complex64::new(-25.0, 30.0),
        Complex64::new(1.3884332650915757719e+10, 4.077709024947962118e+9),
    ),
    (
        0.0,
        Complex64::new(0.0, 15.0),
        Complex64::new(-0.32274256150543203764, 0.022343749666901058364),
    ),
    (
        0.25,
        Complex64::new(0.5, 0.5),
        Complex64::new(0.55688716644559173158, -0.62478400245802625572),
    ),
    (
        0.25,
        Complex64::new(-1.0, 1.0),
        Complex64::new(-1.5207104870174882394, -2.5302175404854915708),
    ),
    (
        0.25,
        Complex64::new(-3.0, 0.2000000000000000111),
        Complex64::new(-2.4310917693105422391, -14.901354734489607078),
    ),
    (
        0.25,
        Complex64::new(-2.0, -4.0),
        Complex64::new(1.2383504536146083032, -4.2346598486140858306),
    ),
    (
        0.25,
        Complex64::new(1.5, -7.0),
        Complex64::new(0.019310110845736804955, 0.10234923793485435586),
    ),
    (
        0.25,
        Complex64::new(-12.0, 9.0),
        Complex64::new(-3.6101554919558574085e+4, 3.8714093261804205821e+4),
    ),
    (
        0.25,
        Complex64::new(4.0, 4.0),
        Complex64::new(-3.092574053624356112e-3, 9.0251632891141270938e-3),
    ),
    (
        0.25,
        Complex64::new(-0.2000000000000000111, -0.10000000000000000555),
        Complex64::new(1.3317764008154022017, 2.8737011718652698611),
    ),
    (
        0.25,
        Complex64::new(-25.0, 30.0),
        Complex64::new(1.3879795209851516535e+10, 4.0669555445898130091e+9),
    ),
    (
        0.25,
        Complex64::new(0.0, 15.0),
        Complex64::new(-0.32271766729277232589, 0.023016087719561206463),
    ),
    (
        1.0,
        Complex64::new(0.5, 0.5),
        Complex64::new(0.5784533638220991963, -1.0828582158182142025),
    ),
    (
        1.0,
        Complex64::new(-1.0, 1.0),
        Complex64::new(-1.9540099018437812646, -1.6064888475187316318),
    ),
    (
        1.0,
        Complex64::new(-3.0, 0.2000000000000000111),
        Complex64::new(-2.265134289089787252, -12.228601872086471104),
    ),
    (
        1.0,
        Complex64::new(-2.0, -4.0),
        Complex64::new(1.6015159949071446661, -3.935809572987997167),
    ),
    (
        1.0,
        Complex64::new(1.5, -7.0),
        Complex64::new(0.013183801468881340334, 0.10517059235378126119),
    ),
    (
        1.0,
        Complex64::new(-12.0, 9.0),
        Complex64::new(-3.444619053758298677e+4, 3.8438212028245733235e+4),
    ),
    (
        1.0,
        Complex64::new(4.0, 4.0),
        Complex64::new(-2.7750694581991555823e-3, 9.7215427811561768698e-3),
    ),
    (
        1.0,
        Complex64::new(-0.2000000000000000111, -0.10000000000000000555),
        Complex64::new(-3.9240067100205542672, 2.3757888390211836401),
    ),
    (
        1.0,
        Complex64::new(-25.0, 30.0),
        Complex64::new(1.3811199799420125138e+10, 3.9066527863436234011e+9),
    ),
    (
        1.0,
        Complex64::new(0.0, 15.0),
        Complex64::new(-0.32217667046492019401, 0.033102377512562860764),
    ),
    (
        1.75,
        Complex64::new(0.5, 0.5),
        Complex64::new(0.15021353143176516836, -2.7660907193914897264),
    ),
    (
        1.75,
        Complex64::new(-1.0, 1.0),
        Complex64::new(-1.7099635791947927234, 0.3511575846422569139),
    ),
    (
        1.75,
        Complex64::new(-3.0, 0.2000000000000000111),
        Complex64::new(-1.7016845292393741371, -8.1530529485699683708),
    ),
    (
        1.75,
        Complex64::new(-2.0, -4.0),
        Complex64::new(2.2464310751129485751, -3.1916378070198603773),
    ),
    (
        1.75,
        Complex64::new(1.5, -7.0),
        Complex64::new(-1.2693618849502094852e-3, 0.11020455534732440282),
    ),
    (
        1.75,
        Complex64::new(-12.0, 9.0),
        Complex64::new(-3.0970314939903703479e+4, 3.7741232615110371361e+4),
    ),
    (
        1.75,
        Complex64::new(4.0, 4.0),
        Complex64::new(-1.8806068358880780029e-3, 0.011335770628809084502),
    ),
    (
        1.75,
        Complex64::new(-0.2000000000000000111, -0.10000000000000000555),
        Complex64::new(-0.83960673618490577021, -21.00313653644108186),
    ),
    (
        1.75,
        Complex64::new(-25.0, 30.0),
        Complex64::new(1.3656864183835021532e+10, 3.5605646542527246928e+9),
    ),
    (
        1.75,
        Complex64::new(0.0, 15.0),
        Complex64::new(-0.3198781273379834558, 0.055262913555230066088),
    ),
    (
        2.0,
        Complex64::new(0.5, 0.5),
        Complex64::new(-0.45583739306665529799, -3.9222651071372214247),
    ),
    (
        2.0,
        Complex64::new(-1.0, 1.0),
        Complex64::new(-1.1321760544245755605, 0.97219230597050552562),
    ),
    (
        2.0,
        Complex64::new(-3.0, 0.2000000000000000111),
        Complex64::new(-1.4744724864120441558, -6.8857117385635784367),
    ),
    (
        2.0,
        Complex64::new(-2.0, -4.0),
        Complex64::new(2.4666774132515404581, -2.8257394157195289884),
    ),
    (
        2.0,
        Complex64::new(1.5, -7.0),
        Complex64::new(-8.2496109183851345969e-3, 0.11190795693151164548),
    ),
    (
        2.0,
        Complex64::new(-12.0, 9.0),
        Complex64::new(-2.9464296316303944706e+4, 3.7387129984811391649e+4),
    ),
    (
        2.0,
        Complex64::new(4.0, 4.0),
        Complex64::new(-1.3753029473525665268e-3, 0.012103764614519264661),
    ),
    (
        2.0,
        Complex64::new(-0.2000000000000000111, -0.10000000000000000555),
        Complex64::new(23.495385302099492079, -31.978082536254694382),
    ),
    (
        2.0,
        Complex64::new(-25.0, 30.0),
        Complex64::new(1.3585210799905666668e+10, 3.4062305808283629847e+9),
    ),
    (
        2.0,
        Complex64::new(0.0, 15.0),
        Complex64::new(-0.31832891117042365621, 0.065300639062223750898),
    ),
    (
        3.3,
        Complex64::new(0.5, 0.5),
        Complex64::new(-36.444105468027493983, -19.699834213238130291),
    ),
    (
        3.3,
        Complex64::new(-1.0, 1.0),
        Complex64::new(1.1448229877326333933, -3.8720547284288654912),
    ),
    (
        3.3,
        Complex64::new(-3.0, 0.2000000000000000111),
        Complex64::new(-0.75355664022508631283, -2.0601269885522776333),
    ),
    (
        3.3,
        Complex64::new(-2.0, -4.0),
        Complex64::new(2.7247197450412896785, -0.15864264509755664519),
    ),
    (
        3.3,
        Complex64::new(1.5, -7.0),
        Complex64::new(-0.065333984996206537958, 0.11088069530465969919),
    ),
    (
        3.3,
        Complex64::new(-12.0, 9.0),
        Complex64::new(-1.9736604436128156854e+4, 3.4227646335967332327e+4),
    ),
    (
        3.3,
        Complex64::new(4.0, 4.0),
        Complex64::new(4.751291221806375362e-3, 0.018160727368463062685),
    ),
    (
        3.3,
        Complex64::new(-0.2000000000000000111, -0.10000000000000000555),
        Complex64::new(-1.532357172774339178e+3, 1.0302121345553126798e+3),
    ),
    (
        3.3,
        Complex64::new(-25.0, 30.0),
        Complex64::new(1.3032464413367006539e+10, 2.3284928255903671191e+9),
    ),
    (
        3.3,
        Complex64::new(0.0, 15.0),
        Complex64::new(-0.29733486638849390527, 0.13733281459714305694),
    ),
    (
        4.5,
        Complex64::new(0.5, 0.5),
        Complex64::new(-569.27312809119075513, 259.98278460863508937),
    ),
    (
        4.5,
        Complex64::new(-1.0, 1.0),
        Complex64::new(-14.045657734307662979, 23.714898177452808824),
    ),
    (
        4.5,
        Complex64::new(-3.0, 0.2000000000000000111),
        Complex64::new(-3.6198413199277005828e-3, -1.007577388043199862),
    ),
    (
        4.5,
        Complex64::new(-2.0, -4.0),
        Complex64::new(0.6580010086572573147, 1.4396672938528773688),
    ),
    (
        4.5,
        Complex64::new(1.5, -7.0),
        Complex64::new(-0.14449284261911819906, 0.06244674537969093667),
    ),
    (
        4.5,
        Complex64::new(-12.0, 9.0),
        Complex64::new(-9.8989628143316262812e+3, 2.9003745825225186235e+4),
    ),
    (
        4.5,
        Complex64::new(4.0, 4.0),
        Complex64::new(0.02282630159757605632, 0.025219031032875682686),
    ),
    (
        4.5,
        Complex64::new(-0.2000000000000000111, -0.10000000000000000555),
        Complex64::new(9.6481525843458462074e+4, -5.5046134784327274439e+4),
    ),
    (
        4.5,
        Complex64::new(-25.0, 30.0),
        Complex64::new(1.2220114936842620833e+10, 1.0203276872448075644e+9),
    ),
    (
        4.5,
        Complex64::new(0.0, 15.0),
        Complex64::new(-0.2428668475612148646, 0.22513072590076911684),
    ),
    (
        5.9,
        Complex64::new(0.5, 0.5),
        Complex64::new(-1.2383794939020455029e+3, 2.3330278041129949109e+4),
    ),
    (
        5.9,
        Complex64::new(-1.0, 1.0),
        Complex64::new(129.42988092600822615, -368.70499089448554336),
    ),
    (
        5.9,
        Complex64::new(-3.0, 0.2000000000000000111),
        Complex64::new(2.1052181313844797837, 1.9704860496823449403),
    ),
    (
        5.9,
        Complex64::new(-2.0, -4.0),
        Complex64::new(-0.2383335553221668715, -0.47610090309503513647),
    ),
    (
        5.9,
        Complex64::new(1.5, -7.0),
        Complex64::new(-0.18686092472631563026, -0.12364975096427932882),
    ),
    (
        5.9,
        Complex64::new(-12.0, 9.0),
        Complex64::new(-648.4967676042195081, 2.0592524004554829132e+4),
    ),
    (
        5.9,
        Complex64::new(4.0, 4.0),
        Complex64::new(0.085644030950762870334, 0.011715666421098862318),
    ),
    (
        5.9,
        Complex64::new(-0.2000000000000000111, -0.10000000000000000555),
        Complex64::new(-2.0708373072131537505e+7, -1.8661398493366629788e+6),
    ),
    (
        5.9,
        Complex64::new(-25.0, 30.0),
        Complex64::new(1.0861776023649893453e+10, -6.7459593533186804806e+8),
    ),
    (
        5.9,
        Complex64::new(0.0, 15.0),
        Complex64::new(-0.10897947960749178932, 0.31915434191550741397),
    ),
];

/// (mu, zeros with Im > 0)
pub const ZEROS: &[(f64, &[Complex64])] = &[
    (1.6, &[Complex64::new(-1.0635574933968364539, 0.085223163058240639757)]),
    (2.0, &[Complex64::new(-1.2813737976560964761, 0.42948496520871969998)]),
    (2.2, &[Complex64::new(-1.3744151608440823672, 0.60336145282758058461)]),
    (3.0, &[Complex64::new(-1.6817888047458454585, 1.3080120322739490523)]),
    (3.3, &[Complex64::new(-1.7785086049607461786, 1.5753613708615541316)]),
    (3.45, &[Complex64::new(-1.824086059866600672, 1.7095703047392605502)]),
    (
        3.7,
        &[
            Complex64::new(-1.8964746790995289947, 1.9339779816513754221),
            Complex64::new(-2.4503637145490536201, 0.17289476413824384682),
        ],
    ),
    (
        4.0,
        &[
            Complex64::new(-1.9781618634659070157, 2.2043719815468711933),
            Complex64::new(-2.6286711679571242175, 0.43269664862177847742),
        ],
    ),
    (
        5.25,
        &[
            Complex64::new(-2.2726470113677642047, 3.3417871727684984214),
            Complex64::new(-3.2459940440473439706, 1.523009024054970354),
        ],
    ),
    (
        5.6,
        &[
            Complex64::new(-2.3449657696430564355, 3.6628586274349205504),
            Complex64::new(-3.3930838415759312854, 1.8306670695447951287),
            Complex64::new(-3.712281491873916273, 0.08662556974928782932),
        ],
    ),
    (
        6.0,
        &[
            Complex64::new(-2.4234043880011252255, 4.0309615812693082657),
            Complex64::new(-3.5510979040000786737, 2.1834951775778858334),
            Complex64::new(-3.9615580702543404851, 0.43334540861473784453),
        ],
    ),
];
