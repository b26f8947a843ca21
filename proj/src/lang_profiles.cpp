#include "cprep/prepare.hpp"

namespace cprep {
namespace {

// Reference prose used to build the bundled rank profiles. Ordinary general
// text; only its n-gram statistics matter.
const char* kEnglishReference = R"(The growth of public libraries changed the way ordinary people found and shared
knowledge. A reader in a small town could borrow books about science, history,
music, or medicine without paying for them, and the collection itself kept
growing as the community asked for more subjects. Librarians organised the
shelves so that a visitor could move from a general survey of a topic to a
detailed treatment of a single question in a few minutes. Catalogues listed
every title by author and subject, and the same cards told the staff which
volumes were missing, damaged, or waiting to be returned. Over the years the
buildings themselves became meeting places where students prepared for
examinations, children listened to stories in the afternoon, and local
societies kept their records. When new technology arrived, the library adapted
again: newspapers on film, recordings of spoken poetry, and later public
computers with access to the wider network. What stayed constant was the idea
that information should be open to anyone willing to walk through the door.
The weather along the coast is mild in most seasons, although storms arrive
quickly from the open water and fishermen watch the sky with care. Farmers in
the valley plant wheat and vegetables in the spring, and the harvest depends
on steady rain during the warm months. Children walk to school along the river
road, and in the evening families gather to cook, talk about the day, and plan
the work that remains. Travel between the villages takes about an hour by bus,
and the mountain pass closes when snow is heavy. Engineers measured the old
bridge last year and decided that the stone arches could carry modern traffic
for another generation with only modest repairs.)";

const char* kChineseReference = R"(公共图书馆的发展改变了普通人获取知识的方式。小城镇的读者可以免费借阅关于科学、
历史、音乐或医学的书籍，而且馆藏会随着社区的需要不断扩充。图书管理员把书架整理得井井有条，
访客只需几分钟就能从一个主题的概述找到对某个具体问题的详细论述。目录按作者和主题列出每一本书，
工作人员也依靠同样的卡片了解哪些书丢失、破损或等待归还。多年以来，图书馆本身成为人们聚会的场所，
学生在这里准备考试，孩子们在下午听故事，地方团体在这里保存档案。新技术到来时，图书馆再次做出调整：
缩微胶片上的报纸、诗歌朗诵的录音，以及后来可以连接网络的公共电脑。始终不变的是一个信念：
信息应当向每一位愿意走进大门的人开放。沿海地区的气候在大多数季节都很温和，不过风暴会从海面迅速袭来，
渔民们小心地观察天空。山谷里的农民在春天种植小麦和蔬菜，收成取决于温暖月份里稳定的降雨。
孩子们沿着河边的道路步行上学，傍晚时分全家人聚在一起做饭，谈论一天的见闻，安排剩下的工作。
村庄之间乘公共汽车大约需要一个小时，大雪封山时山口就会关闭。工程师去年测量了那座老桥，
认为石拱只需适度维修就能再为现代交通服务一代人的时间。)";

} // namespace

const std::vector<LanguageProfile>& builtin_profiles() {
    static const std::vector<LanguageProfile> profiles = {
        build_language_profile("en", kEnglishReference),
        build_language_profile("zh", kChineseReference),
    };
    return profiles;
}

} // namespace cprep
