#pragma once

// Built-in English word list for the spelling check. Override with the
// "dictionary" or "dictionary_file" config keys.
namespace phishnet {

inline constexpr const char* kDefaultDictionary = R"words(
the be to of and a in that have i it for not on with he as you do at this but his by from
they we say her she or an will my one all would there their what so up out if about who
get which go me when make can like time no just him know take people into year your good
some could them see other than then now look only come its over think also back after use
two how our work first well way even new want because any these give day most us is are
was were been has had account accounts bank banking online service services customer
customers login log sign password passwords user username email mail address phone number
card credit debit payment payments transfer transfers balance statement statements secure
security privacy policy terms conditions contact help support home page site website web
click here link links please thank thanks dear hello welcome information details update
updated verify verification confirm confirmation access protect protected protection fraud
alert alerts notice important review reviewed member members team office center personal
business corporate branch branches loan loans mortgage insurance savings checking deposit
deposits investment investments rates rate interest fees fee charges free open opening
apply application download app mobile internet net system systems data private public safe
safety safely ensure assist assistance request requests required require requires news
latest today tomorrow yesterday week weeks month months years hour hours minute minutes
days date times morning evening night regards sincerely best kind faithfully yours truly
find search menu careers investor investors relations media press releases copyright
reserved rights limited india state national international global world country countries
city cities local area areas name names full last middle mr mrs ms sir madam client
clients friend friends family product products offer offers deals deal special specials
price prices shop shopping cart order orders shipping delivery track tracking package
packages return returns refund refunds exchange store stores buy sell sale sales message
messages inbox sent send receive received reply forward delete save saved cancel continue
submit next previous start stop enter exit close view show hide more less many much few
several each every either neither both another such same different own right left top
bottom high low small large big little long short great better bad worse worst old young
early late easy hard simple clear empty true false real possible available unavailable
current recent final total complete completed pending active inactive valid invalid change
changes changed changing create created creating set setting settings manage managing
managed management process processing processed pay paid paying charge charged receiving
note notes notification notifications activity activities unusual suspicious recently
detected detect detection issue issues problem problems error errors fix fixed resolve
resolved question questions answer answers faq frequently asked guide guides learn
learning read reading write writing call calling called visit visiting visited follow
following share sharing join joining register registered registration subscribe
unsubscribe newsletter feedback survey report reports reporting informed inform provide
provided providing include included including used using users need needs needed keep kept
let lets helps helped try tried trying made making took taken taking gave given giving
found finding tell told telling ask worked working seem seemed feel felt leave put meant
mean begin began begun showed shown hear heard play played run ran move moved live lived
believe believed bring brought happen happened wrote sit sat stand stood lose lost add
added spend spent grow grew offered remember remembered love loved consider considered
appear appeared bought wait waited serve served die died expect expected build built stay
stayed fall fell cut reach reached kill remain remained suggest suggested raise raised
pass passed decide decided pull pulled where why whom whose while until unless since
though although whether before during within without through throughout across along
around between among against toward towards upon under above below behind beside besides
beyond near inside outside off onto down away again once twice always never sometimes
often usually already still yet soon later ever almost quite rather very too really
actually simply certainly probably perhaps maybe indeed however therefore thus hence
otherwise instead meanwhile moreover furthermore nevertheless mine myself yourself
yourselves himself hers herself itself ours ourselves theirs themselves those three four
five six seven eight nine ten hundred thousand million billion second third money cash
dollar dollars rupee rupees euro euros pound pounds amount amounts funds fund government
tax taxes income regulation regulations law legal compliance official officially
technology software hardware computer computers device devices browser browsers windows
server servers network networks connection connections connect connected wireless kindly
immediately urgent urgently shortly promptly education school students student teacher
health care medical hospital doctor water food house room door window car road street town
travel train plane ship person man men woman women child children boy girl baby life lives
body head hand hands eye eyes face word words story stories fact facts point points group
groups case cases part parts place places company companies program programs numbers thing
things ways
)words";

}  // namespace phishnet
