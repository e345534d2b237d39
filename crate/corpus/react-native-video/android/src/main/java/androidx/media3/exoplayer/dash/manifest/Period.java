package androidx.media3.exoplayer.dash.manifest;

import androidx.collection.CircularArray;

public class Period {
    public CircularArray<AdaptationSet> adaptationSets;
}
