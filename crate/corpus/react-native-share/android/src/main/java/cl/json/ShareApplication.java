package cl.json;

public interface ShareApplication {

    public String getFileProviderAuthority();

}
