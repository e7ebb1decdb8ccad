#!/usr/bin/env python3
"""Regenerate the mock-gateway fixture file and the pipeline test fixtures.

Canned replies are keyed by sha256(envelope_key + "\n" + user payload);
back-translation entries must key on the *length-capped* English draft,
so this script computes those keys with the real enforce_length.

Run from the repo root:  PYTHONPATH=src python3 scripts/build_fixtures.py
"""

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from sehatbot.gateway import (  # noqa: E402
    ENVELOPE_ANSWER,
    ENVELOPE_GRAMMAR,
    ENVELOPE_TRANSLATED,
    mock_reply_key,
)
from sehatbot.generation import enforce_length  # noqa: E402

WORD_CAP = 150

# (hinglish_query, english_query, english_answer | None, hinglish_answer | None)
FIXTURES = [
    (
        "Saheli tablet se periods ka date badal jata hai kya?",
        "Does Saheli tablet change the date of periods?",
        "Saheli, also known as Centchroman, is a non-steroidal oral contraceptive "
        "pill. Sometimes this can lead to changes in the menstrual cycle, due to "
        "which the dates of periods can change. This is because it can affect the "
        "hormones that regulate the menstrual cycle. If you notice any significant "
        "changes in your cycle or have any concerns, it is important to discuss "
        "this with your healthcare provider. Remember, every woman's body reacts "
        "differently to contraceptives, so it is beneficial to keep track of your "
        "cycle and note any changes. If you feel uncomfortable or have any "
        "questions, please consult a Myna's Telehealth doctor.",
        "Saheli, jo Centchroman ke naam se bhi jaani jaati hai, ek non-steroidal "
        "oral contraceptive pill hai. Kabhi-kabhi yeh menstrual cycle mein "
        "parivartan laa sakta hai, jiske karan period ki dates mein badlav ho "
        "sakta hai. Iska yeh wajah hai ki yeh hormones par asar daal sakta hai jo "
        "menstrual cycle ko niyantrit karte hain. Agar aapko apne cycle mein koi "
        "bhi bada parivartan mehsoos ho ya koi bhi chinta ho, toh isko healthcare "
        "provider ke saath discuss karna mahatvapurn hai. Yaad rakhein, har "
        "mahila ke sharir ka prativarsh contraceptives ke prati alag prakar se "
        "react karta hai, isliye apne cycle ka dhyan rakhna aur kisi bhi "
        "parivartan ko note karna faydemand hai. Agar aapko asamanata mehsoos ho "
        "rahi hai ya aur koi sawaal ho, toh kripya Myna's Telehealth ke doctor se "
        "paramarsh karein.",
    ),
    (
        "Kya 3 sal bad purush nasbandi fail ho sakti hai?",
        "Can vasectomy fail after 3 years?",
        "The chances of a vasectomy failing are very low, but technically, it is "
        "possible that a vasectomy may fail even after several years. Its main "
        "function is recanalization, in which the separated parts of the vasa "
        "deferens start reattaching themselves and thankfully beginning to meet "
        "the semen. However, this is very rare, especially if the initial tests "
        "after vasectomy are not found successfully. If you are concerned about "
        "conceiving after a vasectomy, it would be appropriate to have a semen "
        "analysis done. This test will help you confirm whether the vasectomy is "
        "still effective. Do you need any further information about the long-term "
        "effectiveness of vasectomy?",
        "Vasectomy ke fail hone ke chances bahut hi kam hote hain, lekin "
        "technically, yeh sambhav hai ki vasectomy ke kai saal baad bhi fail ho "
        "sakta hai. Iska mukhya karan hota hai recanalization, jisme vasa "
        "deferens ke kata hua hisse apne aap phir se jud jaate hain aur shukranu "
        "veerya mein milne lagte hain. Lekin, aisa hona bahut hi durlabh hai, "
        "khaas taur par agar vasectomy ke baad ke shuruaati veerya parikshan mein "
        "shukranu nahi paaye gaye ho. Yadi aapko vasectomy ke baad garbh dharan "
        "ki chinta hai, to veerya parikshan (semen analysis) karwana uchit hoga. "
        "Yeh jaanch aapko yeh pushti karne mein madad karegi ki vasectomy abhi "
        "bhi prabhavi hai ya nahi. Kya aapko vasectomy ke long-term prabhavi hone "
        "ya isse judi aur koi jaankari chahiye?",
    ),
    (
        "Family planning main muje sirf ladka chahiye to uske liye khuch upay hai kya?",
        "In family planning, I only want a boy, Are there any methods for that??",
        "There is no guaranteed way to choose the gender of a baby. The main "
        "objective of family planning is to control pregnancy, not to select a "
        "child's gender. Some people try different methods, such as timing and "
        "specific techniques, to predict whether they will have a boy or a girl, "
        "but these methods are not scientifically proven and have no reliable "
        "basis. If you are considering family planning options, it is important "
        "to focus on methods that are best suited for you and your family. If you "
        "would like more information or need any specific advice, please consult "
        "a doctor with Myna's Telehealth.",
        "Bacche ka janm chunne ka koi pakka tarika nahi hai. Parivaar niyojan ka "
        "mukhya uddeshya garbhavastha ko niyantrit karna hota hai, na ki bacche "
        "ke janm ko chunna. Kuch log koshish karte hain ki timing aur tarah-tarah "
        "ke tareeke apna kar ladka ya ladki hone ka anumaan lagaye, lekin yeh "
        "vidhiyan bilkul bhi pakki nahi hoti hain aur inka koi vaigyanik aadhar "
        "nahi hota. Agar aap parivaar niyojan ke vikalpon ke baare mein soch rahe "
        "hain, toh aapko un vikalpon par vichar karna chahiye jo aapke aur aapke "
        "parivaar ke liye sahi ho. Agar aap aur jaankari chahte hain ya kisi "
        "vishesh salah ki zaroorat hai, toh kripya Myna's Telehealth ke saath "
        "doctor se salah lein.",
    ),
    (
        "Family planning me sex word ko family ke samne kyu Nhi bol na chaya?",
        "Why shouldn't the word 'sex' be used in front of family when discussing "
        "family planning?",
        "In every family and community, communication styles vary. In some "
        "families, the term 'sex' is not used openly because it may be "
        "uncomfortable for them. This can be due to social or cultural beliefs. "
        "When it comes to family planning, people often discuss the topic in a "
        "more considerate manner, using terms like 'making relations', 'family "
        "planning', or 'planning for children'. It is important to respect the "
        "feelings of your family members when discussing this topic and to "
        "choose words that are comfortable for everyone. This helps in having "
        "open and meaningful conversations without making anyone feel "
        "uncomfortable.",
        "Har parivaar aur samaj mein baatcheet ke tareeke alag hote hain. Kuch "
        "parivaaron mein 'sex' shabd ka istemal khule aam nahi kiya jata kyunki "
        "yeh unke liye asahaj ho sakta hai. Yeh samajik ya sanskritik maanyataon "
        "ke karan ho sakta hai. Jab family planning ki baat aati hai, toh kai "
        "baar log is vishay ko aur adhik samajhdaar tareeke se, jaise 'sambandh "
        "banana', 'parivaar niyojan' ya 'bachche ki planning' ke roop mein "
        "discuss karte hain. Yeh zaroori hai ki jab aap apne parivaar ke saath is "
        "vishay par charcha karte hain, toh aap unki bhavnaon ka samman karein "
        "aur aise shabdon ka chayan karein jo sabke liye suvidhajanak ho. Isse "
        "baatcheet ko aage badhane mein madad milti hai aur sabhi ko asahaj "
        "mehsoos nahi hota.",
    ),
    (
        "Parivar niyojan nasbandi ke ghav bharane ke liye kya khana chahie",
        "What to eat to heal family planning sterilization wounds",
        "Eating a nutritious diet is essential for proper wound healing after "
        "sterilization. Here are some dietary recommendations that can help in "
        "recovery:\n"
        "1. Protein rich diet: Protein is important for wound healing. Eat "
        "protein-rich foods like dal, chana, soybean, paneer, curd, eggs, "
        "chicken, and fish.\n"
        "2. Vitamin C and Zinc: Both these dietary elements help in wound "
        "healing. Oranges, lemons, kiwi, plums, bell peppers, walnuts, and seeds "
        "should be consumed in the diet.\n"
        "3. Green Vegetables: Spinach, fenugreek, sarson, and other green "
        "vegetables are rich in vitamins and minerals that help in tissue "
        "repair.\n"
        "4. Fruits: Fresh fruits like apple, banana, papaya, and berries are "
        "rich in antioxidants which keep the body healthy.\n"
        "5. Adequate water: Drink adequate amount of water because hydration is "
        "necessary for wound healing.\n"
        "6. Whole Grains: Whole grains like wheat, barley, and oats are rich in "
        "fiber which keeps the digestive system healthy.\n"
        "In addition to this diet, diets containing alcohol, caffeine, and other "
        "sugars should be avoided as they can slow down the wound healing "
        "process. Do you need any more suggestions or information?",
        "Nasbandi ke ghav ko bharne ke liye poshtik aahar ka sevan karna bahut "
        "zaroori hai. Yahaan kuch aahar sambandhi sujhav diye ja rahe hain jo "
        "ghav bharne mein madadgar ho sakte hain:\n"
        "1. Protein Yukt Aahar: Protein ghav bharne ke liye mahatvapurn hota "
        "hai. Daal, chana, soybean, paneer, dahi, ande, chicken, aur machli "
        "jaise protein se bharpoor aahar khayein.\n"
        "2. Vitamin C aur Zinc: Ye dono poshak tatva ghav bharne mein sahayak "
        "hote hain. Santre, nimbu, kiwi, tamatar, bell peppers, akhrot, aur beej "
        "jaise aahar mein inka sevan badhayein.\n"
        "3. Harit Sabjiyan: Palak, methi, sarson, aur anya harit sabjiyan "
        "vitamins aur minerals se bharpoor hoti hain jo sharir ki marammat mein "
        "madad karte hain.\n"
        "4. Phal: Taaza phal jaise seb, kela, papita, aur berries antioxidants "
        "se bharpoor hote hain jo sharir ko swasth rakhte hain.\n"
        "5. Paryapt Paani: Paryapt matra mein paani piyein kyunki hydration ghav "
        "bharne ke liye zaroori hai.\n"
        "6. Whole Grains: Gehun, jau, aur oats jaise whole grains fiber se "
        "bharpoor hote hain jo pachan tantra ko durust rakhte hain.\n"
        "In aahar ke alava, sharab, caffeine, aur atyadhik chini yukt aahar se "
        "bachna chahiye kyunki ye ghav bharne ki prakriya ko dhima kar sakte "
        "hain. Kya aapko aur koi sujhav ya jaankari chahiye?",
    ),
    (
        "Religion m operation karna mana hai to kya kare",
        "What to do if surgery is prohibited in religion?",
        "If your religion or beliefs are against operations or surgical "
        "procedures, you should consider some non-surgical birth control "
        "methods. There are some non-surgical methods:\n"
        "1. Condoms: This is an effective method that protects against pregnancy "
        "and sexually transmitted infections (STIs).\n"
        "2. Oral contraceptive pills: Taken daily by women to prevent "
        "pregnancy.\n"
        "3. Vaginal rings: These are inserted into the vagina for a month at a "
        "time.\n"
        "4. Contraceptive patches: These are patches applied on the skin which "
        "have to be changed weekly.\n"
        "5. Natural family planning methods: Like ovulation tracking and "
        "withdrawal method.\n"
        "Any of these options may be right for you. But, before using them, it "
        "is important to understand that some methods, such as natural family "
        "planning, may be less effective. You should seek guidance from your "
        "religious leader or community as well as a doctor. You can also contact "
        "\"Myna's Telehealth\" where you can consult a doctor who can give you "
        "the right guidance taking into account your religious beliefs.",
        "Agar aapka dharm ya vishwas operation ya surgical procedures ke khilaf "
        "hai, to aapko kuch non-surgical birth control methods ke baare mein "
        "sochna chahiye. Kuch non-surgical methods hain:\n"
        "1. Condoms: Yeh ek prabhavi tarika hai jo pregnancy aur sexually "
        "transmitted infections (STIs) se bachav karta hai.\n"
        "2. Oral contraceptive pills: Mahilao ke liye daily leni padti hain.\n"
        "3. Vaginal rings: Yeh mahine bhar ke liye insert ki jaati hain.\n"
        "4. Contraceptive patches: Yeh skin par chipkane wale patches hote hain "
        "jo weekly badalne padte hain.\n"
        "5. Natural family planning methods: Jaise ki ovulation tracking aur "
        "withdrawal method.\n"
        "In sabhi options mein se koi bhi aapke liye sahi ho sakta hai. Lekin, "
        "inka istemal karne se pehle, yeh samajhna zaroori hai ki kuch methods "
        "jaise ki natural family planning, kam effective ho sakte hain. Aapko "
        "apne dharmik leader ya samuday ke margdarshan ke saath-saath ek doctor "
        "se bhi salah leni chahiye. Aap \"Myna's Telehealth\" se bhi sampark kar "
        "sakti hain jahan aapko doctor se salah mil sakti hai jo aapke dharmik "
        "vishwas ko samajhte hue aapko sahi margdarshan de sakte hain.",
    ),
    (
        "Proper age kya hai first time sex karne ka?",
        "What is the proper age to have sex for the first time?",
        "The concept of 'proper age' for sex depends on legal and emotional "
        "maturity. In every country, the legal age of having sex (also known as "
        "the 'age of consent') varies, and is usually between 16 and 18 years. "
        "This legal age is required to ensure that a person is emotionally and "
        "physically mature enough to understand his/her decisions and handle "
        "their consequences. But, merely being of legal age is not enough. It is "
        "also important that the person is emotionally ready, has the right "
        "information, and is ready to have a healthy and balanced relationship "
        "with his/her partner. It is also important to understand the importance "
        "of safe sex and consent. Therefore, the 'right time' to have sex for "
        "the first time depends on the person's own thoughts, feelings, and "
        "circumstances. If someone needs more help or information in this "
        "matter, it would be wise to talk to a trusted doctor or healthcare "
        "provider.",
        "Sex ke liye 'proper age' ka concept legal aur emotional maturity par "
        "depend karta hai. Har desh mein, sex karne ki legal age (jise 'age of "
        "consent' bhi kaha jata hai) alag hoti hai, aur yeh aam taur par 16 se "
        "18 saal ke beech hoti hai. Ye legal umar yeh sunishchit karni ke liye "
        "hoti hai ki vyakti emotionally aur physically mature ho chuke hain apne "
        "decisions samajhne aur unke parinaam ko sambhalne ke liye. Lekin, sirf "
        "legal age ka hona hi kafi nahi hai. Yeh bhi zaroori hai ki vyakti "
        "emotionally ready ho, unke paas sahi jankari ho, aur wo apne partner ke "
        "saath ek swasth aur samajhdar rishta banane ke liye taiyar ho. Safe sex "
        "aur consent (aapsi sahmati) ke mahatva ko samajhna bhi zaroori hai. "
        "Isliye, pehli baar sex karne ka 'sahi samay' vyakti ke apne vichar, "
        "bhavnaon, aur paristhitiyon par nirbhar karta hai. Agar kisi ko is "
        "vishay mein aur madad ya jankari ki zarurat ho, to ek vishwasniya "
        "doctor ya healthcare provider se baat karna uchit hoga.",
    ),
    (
        "15 saal ke ladki family planning kar sakti hai?",
        "Can a 15 year old girl do family planning?",
        "Yes, a 15 year old girl can think about family planning, but in this "
        "age, mostly the focus will be on education and personal development. If "
        "family planning is needed, you should first consider non-invasive "
        "methods such as barrier methods (condom use) or oral contraceptives "
        "(pills). Both of these methods are safe and reversible, meaning you can "
        "stop using them whenever you want. But, before taking any decision, it "
        "is important to consult a specialist or doctor of Myna's Telehealth. "
        "His guidance will guide you in the right direction.",
        "Haan, 15 saal ki ladki family planning ke baare mein soch sakti hai, "
        "lekin is umar mein, zyadatar focus education aur personal development "
        "par hota hai. Agar family planning ki zarurat ho, toh sabse pehle "
        "non-invasive methods jaise ki barrier methods (condom ka istemal) ya "
        "oral contraceptives (goliyan) ke baare mein sochna chahiye. Ye dono "
        "tareeke surakshit aur reversible hote hain, matlab aap jab chahein toh "
        "inhe band kar sakti hain. Lekin, kisi bhi tarah ka decision lene se "
        "pehle, ek visheshagya ya Myna's Telehealth ke doctor se salah zaroor "
        "lein. Unka margdarshan aapko sahi disha mein le jayega.",
    ),
    (
        "Shadi ke bad Hasband ke satha nhi raha hai to Kya divorce lena sahi hai?",
        "If I don't stay with my husband after marriage, is it right to get a "
        "divorce?",
        "If you are no longer able to get along with your husband after marriage "
        "and you feel that there are problems between you, then it is important "
        "to first understand what the problem is. Every relationship is "
        "different and sometimes it can be difficult to understand or find a "
        "solution. But, it is also important that both of you talk to each other "
        "openly and try to find a solution to the problem. If you feel that you "
        "have tried everything and still cannot find a solution, then you should "
        "listen to your heart. This is a very big decision, so take time to "
        "think about it and also consult a specialist or counselor if necessary. "
        "Your happiness and health come first.",
        "Shaadi ke baad agar aap apne pati ke saath nahi reh paayi hain aur "
        "aapko lagta hai ki aapke beech samasyaayein hain, toh pehle yeh "
        "samajhna zaroori hai ki samasya kya hai. Har rishta alag hota hai aur "
        "kabhi-kabhi samajhauta ya samadhan dhoondhna mushkil ho sakta hai. "
        "Lekin, yeh bhi zaroori hai ki aap dono ek dusre se khule mann se baat "
        "karein aur samasyaon ka hal dhoondhne ki koshish karein. Agar aapko "
        "lagta hai ki aapne sab kuch try kar liya hai aur phir bhi samadhan nahi "
        "mil raha, toh aapko apne dil ki sunni chahiye. Yeh ek bahut bada faisla "
        "hai, isliye is par salah karne ke liye samay lein aur zaroorat padne "
        "par kisi visheshagya ya counsellor se bhi salah lein. Aapke khushi aur "
        "swasthya sabse pehle aate hain.",
    ),
    (
        "Purush nasbandi kyun nahi karte",
        "Why don't men do vasectomy?",
        "Male sterilization, or vasectomy, is a permanent contraceptive "
        "procedure that is very safe and effective. But, sometimes men do not "
        "undergo this procedure due to many reasons:\n"
        "1. Lack of information: Many men do not have the correct knowledge "
        "about this procedure.\n"
        "2. Misconceptions: Some men believe that sterilization will affect "
        "their sexual strength or masculinity, which is incorrect.\n"
        "3. Social Pressure: In some communities, there is a belief that "
        "sterilization is only meant for women.\n"
        "4. Fear: The fear of surgery or medical procedures can also be a "
        "factor.\n"
        "Vasectomy does not reduce a man's sexual ability nor does it cause any "
        "changes in male hormones. This is a safe and less painful procedure. If "
        "you or someone you know is interested and would like more information, "
        "please contact your local health center or doctor. Would you like to "
        "ask anything else about this?",
        "Purush nasbandi, ya vasectomy, ek sthayi garbhnirodhak prakriya hai jo "
        "ki bahut surakshit aur prabhavi hoti hai. Lekin, kai baar purush is "
        "prakriya ko nahi karwate hain kuch karanon ki wajah se:\n"
        "1. Jankari ka abhav: Kai purushon ko is prakriya ke baare mein sahi "
        "jankari nahi hoti hai.\n"
        "2. Galatfahmi: Kuch purush sochte hain ki nasbandi se unki yon himmat "
        "ya mardangi prabhavit hogi, jo ki galat hai.\n"
        "3. Samajik Dabav: Samaj mein kai baar aise vichar hote hain ki nasbandi "
        "mahilaon ke liye hi hai.\n"
        "4. Darr ya Bhay: Operation ya surgery ka bhay bhi ek karan ho sakta "
        "hai.\n"
        "Vasectomy ke baad purushon ki yon himmat mein koi kami nahi aati aur na "
        "hi unke purush hormones mein koi parivartan hota hai. Yeh ek surakshit "
        "aur kam takleefdeh prakriya hai. Agar aap ya aapke parichit is vishay "
        "mein aur jaankari chahte hain, toh kripya sthaniya swasthya kendra ya "
        "doctor se sampark karein. Aapko aur kuch poochna hai is vishay mein?",
    ),
    (
        "Agar bacha nahi rukh raha hbai to uska main karan kya ho sakta hai?",
        "If I'm not getting pregnant, what could be the main reason?",
        "I understand that you might be worried about your problem. There can be "
        "several reasons for not getting pregnant. Have you noticed any changes "
        "in your menstrual cycle recently? Has your weight increased suddenly or "
        "do you have any other health issues like thyroid problems or PCOS? "
        "Also, have you ever considered family planning methods? This "
        "information will help me better understand your issue.",
        "Aapki samasya ke liye main samajh sakti hoon ki aapko chinta ho rahi "
        "hai. Bacha na rukhne ke kai karan ho sakte hain. Kya aapko pichhle kuch "
        "samay se periods mein koi badlav mehsoos ho raha hai? Kya aapka weight "
        "sudden mein badh gaya hai ya fir koi aur health issue hai jaise ki "
        "thyroid ya PCOS? Aur kya aapne kabhi family planning methods ke baare "
        "mein socha hai? Ye jaankari mujhe aapki samasya ko samajhne mein madad "
        "karegi.",
    ),
    (
        "Mujhe kuch nahi malum muje kya huva hai please aap bataye ki kya karan "
        "ho sakte hai",
        "I don't know anything, please tell me what could be the reasons.",
        "I understand that you don't know much about your health, but you're "
        "worried. There could be several reasons for your issue:\n"
        "- Hormonal Changes: Sometimes stress or weight gain/loss can cause "
        "hormonal imbalances, leading to irregular periods.\n"
        "- Anemia: Low hemoglobin (iron deficiency) can also cause irregular "
        "periods.\n"
        "- Thyroid Issues: Abnormal thyroid gland activity can affect your "
        "menstrual cycle.\n"
        "- Polycystic Ovary Syndrome (PCOS): This condition, where cysts form on "
        "the ovaries, can lead to irregular periods.\n"
        "Are you experiencing any other symptoms, such as abdominal pain or mood "
        "swings? And have you been involved in any activities that might be "
        "causing you stress? This information will help me better understand "
        "your problem.",
        "Mujhe samajh hai ki aapko apne swasthya ke baare mein kuch pata nahi "
        "hai, lekin aapko chinta toh hai. Aapki samasya ke kuch karan ho sakte "
        "hain:\n"
        "- Hormonal badlav: Kabhi-kabhi stress ya wajan badhna/loss ke karan "
        "hormones mein asantulan ho sakta hai, jisse periods regular nahi "
        "rehte.\n"
        "- Khoon ki kami: Kam hemoglobin (blood mein iron ki kami) bhi periods "
        "ko asamanya bana sakta hai.\n"
        "- Thyroid samasya: Thyroid gland ki asamanya gatividhi bhi periods ko "
        "prabhavit kar sakti hai.\n"
        "- Polycystic Ovary Syndrome (PCOS): Ismein ovary mein cysts bante hain, "
        "jo periods ko asamanya kar dete hain.\n"
        "Aapko kya koi aur lakshan mehsoos ho rahe hain, jaise ki pet mein dard "
        "ya chidchidapan? Aur kya aapne koi aisi gatividhi ki hai jisse aapko "
        "stress ho raha ho? Ye jaankari mujhe aapki samasya ko samajhne mein "
        "madad karegi.",
    ),
    (
        "Apni job family planning ke liye kitni important hai?",
        "How important is one's job for family planning?",
        "My work is very important in family planning. I provide women and their "
        "partners with accurate information and guidance about their family "
        "planning options. This helps them decide when and how many children "
        "they want. I would tell them about different types of contraceptives, "
        "like the pill, IUD, or condoms, and also explain their advantages, "
        "disadvantages, and contraindications. Apart from this, I also give them "
        "advice regarding pregnancy related problems and their solutions. My aim "
        "is that every person and every family should make informed decisions "
        "regarding their health and future. In this way, I can contribute to "
        "improving the health and well-being of the society.",
        "Mera kaam parivar niyojan mein bahut mahatvapurna hai. Main mahilaon "
        "aur unke sathiyon ko unke parivar niyojan ke vikalpon ke baare mein "
        "sahi jankari aur margadarshan pradan karta hoon. Ye unhe ye tay karne "
        "mein madad karta hai ki woh kab aur kitne bachche chahte hain. Main "
        "unhe alag-alag garbh nirodhak ke baare mein batata hoon, jaise ki "
        "goliyan, IUD, ya Condom, aur unke fayde, nuksan, aur dushparinam ke "
        "baare mein bhi samjhaata hoon. Iske alava, main unhe garbhavastha se "
        "sambandhit samasyaon aur unke samadhanon ke baare mein bhi salah deta "
        "hoon. Mera uddeshya hai ki har vyakti aur har parivar apne swasthya aur "
        "bhavishya ke nirnay soch-samajh kar le. Is tarah, main samaj mein "
        "swasthya aur kalyan ko behtar dene mein yogdan deta hoon.",
    ),
    (
        "Condom Kya hota hai?",
        "What is a condom?",
        None,
        None,
    ),
    (
        "Family planning ke liye Copper-T lagate hain, vah lagane ke liye kitna "
        "time lagta hai??",
        "How much time does it take to insert copper-T for family planning?",
        None,
        None,
    ),
    (
        "Family planning mein diaphragm use karne se UTI ke problem ho sakte hai kay?",
        "Can using a diaphragm for family planning cause UTI problems?",
        None,
        None,
    ),
    (
        "Adrak ka juice peene se kya abortion hota hai?",
        "Does drinking ginger juice cause abortion?",
        None,
        None,
    ),
    (
        "IVF india me bhi hota hai kya?",
        "Is IVF also available in India?",
        None,
        None,
    ),
    (
        "Paisa Na Ho to Kya family planning ho sakti hai?",
        "Can family planning be done if there is no money?",
        None,
        None,
    ),
    (
        "Mahila nasbandi ke tanke sukhne ke liye Kya Karen?",
        "What should be done to help the stitches from female sterilization "
        "heal properly?",
        None,
        None,
    ),
]

# Extra canned pairs outside the 20-query golden set.
EXTRA_GRAMMAR = [
    ("cooperate T kya hai", "Copper-T kya hai"),
]
EXTRA_TRANSLATIONS = [
    ("Copper-T kya hai", "What is Copper-T?"),
]


def main() -> None:
    replies: dict[str, str] = {}
    fixtures = []
    for hinglish_query, english_query, answer_en, answer_hi in FIXTURES:
        replies[mock_reply_key(ENVELOPE_TRANSLATED, hinglish_query)] = english_query
        entry = {"query": hinglish_query, "english_query": english_query}
        if answer_en:
            replies[mock_reply_key(ENVELOPE_ANSWER, english_query)] = answer_en
            capped_en, _ = enforce_length(answer_en, WORD_CAP)
            if answer_hi:
                replies[mock_reply_key(ENVELOPE_TRANSLATED, capped_en)] = answer_hi
            entry["canned"] = True
        else:
            entry["canned"] = False
        fixtures.append(entry)

    for source, fixed in EXTRA_GRAMMAR:
        replies[mock_reply_key(ENVELOPE_GRAMMAR, source)] = fixed
    for source, english in EXTRA_TRANSLATIONS:
        replies[mock_reply_key(ENVELOPE_TRANSLATED, source)] = english

    fixture_payload = {
        "_comment": (
            "Deterministic mock-gateway fixture. Keys are "
            "sha256('<envelope_key>\\n<user_text>') hex digests; values are the "
            "canned envelope payloads."
        ),
        "seed": 0,
        "replies": replies,
    }
    out = ROOT / "src" / "sehatbot" / "data" / "mock_replies.json"
    out.write_text(
        json.dumps(fixture_payload, ensure_ascii=False, indent=1, sort_keys=True),
        encoding="utf-8",
    )
    print(f"wrote {out} ({len(replies)} canned replies)")

    tests_out = ROOT / "tests" / "data" / "pipeline_fixtures.json"
    tests_out.parent.mkdir(parents=True, exist_ok=True)
    tests_out.write_text(
        json.dumps(fixtures, ensure_ascii=False, indent=1), encoding="utf-8"
    )
    print(f"wrote {tests_out} ({len(fixtures)} fixture queries)")


if __name__ == "__main__":
    main()
